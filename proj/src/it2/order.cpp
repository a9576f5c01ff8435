// Copyright 2026 The docit2 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "docit2/it2/order.hpp"

#include "docit2/error.hpp"

namespace docit2::it2 {

std::string_view to_string(Ordering o) {
  switch (o) {
    case Ordering::kLess: return "less";
    case Ordering::kEqual: return "equal";
    case Ordering::kGreater: return "greater";
  }
  return "?";
}

Ordering reverse(Ordering o) {
  if (o == Ordering::kLess) return Ordering::kGreater;
  if (o == Ordering::kGreater) return Ordering::kLess;
  return o;
}

namespace {

template <typename T>
Ordering compare_values(const T& a, const T& b) {
  if (a < b) return Ordering::kLess;
  if (b < a) return Ordering::kGreater;
  return Ordering::kEqual;
}

// Trapezoid rule over the stored levels; exact because cut endpoints are
// linear in alpha between consecutive levels.
template <typename F>
Rational integrate_over_levels(const fuzzy::PiecewiseMF& mf, F f) {
  const auto lv = mf.levels().values();
  const auto cuts = mf.cuts();
  Rational total = 0;
  for (std::size_t i = 0; i + 1 < lv.size(); ++i) {
    const Rational da = Rational(lv[i + 1]) - Rational(lv[i]);
    total += da * (f(cuts[i]) + f(cuts[i + 1])) / 2;
  }
  return total;
}

}  // namespace

Rational midpoint_integral(const fuzzy::PiecewiseMF& mf) {
  return integrate_over_levels(mf, [](const fuzzy::Interval& c) -> Rational {
    return (Rational(c.lo) + Rational(c.hi)) / 2;
  });
}

Rational width_integral(const fuzzy::PiecewiseMF& mf) {
  return integrate_over_levels(mf, [](const fuzzy::Interval& c) -> Rational {
    return Rational(c.hi) - Rational(c.lo);
  });
}

Ordering t1_admissible_order(const fuzzy::PiecewiseMF& a, const fuzzy::PiecewiseMF& b) {
  if (auto k1 = compare_values(midpoint_integral(a), midpoint_integral(b)); k1 != Ordering::kEqual) {
    return k1;
  }
  // Narrower spread ranks higher.
  if (auto k2 = compare_values(width_integral(b), width_integral(a)); k2 != Ordering::kEqual) {
    return k2;
  }
  const auto levels = fuzzy::exact_level_union(a, b);
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    const auto ca = fuzzy::exact_alpha_cut(a, *it);
    const auto cb = fuzzy::exact_alpha_cut(b, *it);
    if (auto lo = compare_values(ca.lo, cb.lo); lo != Ordering::kEqual) return lo;
    if (auto hi = compare_values(ca.hi, cb.hi); hi != Ordering::kEqual) return hi;
  }
  return Ordering::kEqual;
}

Ordering it2_order_1(const IT2MF& a, const IT2MF& b, const T1Order& t1) {
  if (auto first = t1(a.lower(), b.lower()); first != Ordering::kEqual) return first;
  return t1(a.upper(), b.upper());
}

Ordering it2_order_2(const IT2MF& a, const IT2MF& b, const T1Order& t1) {
  if (auto first = t1(a.upper(), b.upper()); first != Ordering::kEqual) return first;
  return t1(a.lower(), b.lower());
}

Ordering it2_compare(IT2OrderKind kind, const IT2MF& a, const IT2MF& b) {
  switch (kind) {
    case IT2OrderKind::kLowerFirst: return it2_order_1(a, b);
    case IT2OrderKind::kUpperFirst: return it2_order_2(a, b);
  }
  throw Error(ErrorKind::kInternal, "unknown IT2 order");
}

}  // namespace docit2::it2
