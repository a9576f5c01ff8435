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

#include "docit2/elicitation/sides.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "docit2/error.hpp"

namespace docit2::elicitation {

using fuzzy::AlphaLevels;
using fuzzy::Interval;
using fuzzy::kLevelTolerance;
using fuzzy::PiecewiseMF;

namespace {

double support_edge(Side side, const CoreSupport& cs) {
  return side == Side::kLeft ? cs.support.lo : cs.support.hi;
}

double core_edge(Side side, const CoreSupport& cs) {
  return side == Side::kLeft ? cs.core.lo : cs.core.hi;
}

SideFragment straight(Side side, const CoreSupport& cs) {
  return SideFragment{side, {support_edge(side, cs), core_edge(side, cs)}, {0.0, 1.0}};
}

// Domain position where the side reaches membership alpha.
double inverse(const SideFragment& f, double alpha) {
  const auto& m = f.memberships;
  for (std::size_t r = 0; r + 1 < m.size(); ++r) {
    if (alpha == m[r]) return f.xs[r];
    if (alpha < m[r + 1]) {
      const double t = (alpha - m[r]) / (m[r + 1] - m[r]);
      return f.xs[r] + t * (f.xs[r + 1] - f.xs[r]);
    }
  }
  return f.xs.back();
}

// Levels in (a0, a1) where the upper (or lower) envelope of the lines from
// v0[k] at a0 to v1[k] at a1 switches to another line.
void envelope_switches(const std::vector<double>& v0, const std::vector<double>& v1, double a0, double a1,
                       bool take_max, std::vector<double>& out) {
  const double span = a1 - a0;
  const std::size_t n = v0.size();
  auto better = [&](double x, double y) { return take_max ? x > y : x < y; };
  auto slope = [&](std::size_t k) { return (v1[k] - v0[k]) / span; };

  // Envelope line just after a0: best value, then best slope.
  std::size_t cur = 0;
  for (std::size_t k = 1; k < n; ++k) {
    if (better(v0[k], v0[cur]) || (v0[k] == v0[cur] && better(slope(k), slope(cur)))) cur = k;
  }
  double at = a0;
  for (std::size_t guard = 0; guard < n; ++guard) {
    std::size_t next = cur;
    double first = a1;
    for (std::size_t k = 0; k < n; ++k) {
      if (!better(slope(k), slope(cur))) continue;
      const double cross = a0 + (v0[cur] - v0[k]) / (slope(k) - slope(cur));
      if (cross > at && cross < first) {
        first = cross;
        next = k;
      }
    }
    if (next == cur || first >= a1 - kLevelTolerance) return;
    if (first > a0 + kLevelTolerance) out.push_back(first);
    at = first;
    cur = next;
  }
}

}  // namespace

std::string_view to_string(Side s) { return s == Side::kLeft ? "left" : "right"; }

std::vector<double> default_breakpoints(std::size_t p, Side side, const CoreSupport& cs) {
  if (p < 2) throw Error(ErrorKind::kDomain, "a side needs at least two alternatives");
  const double from = support_edge(side, cs);
  const double to = core_edge(side, cs);
  std::vector<double> xs;
  for (std::size_t r = 0; r < p; ++r) {
    xs.push_back(r + 1 == p ? to : from + (to - from) * static_cast<double>(r) / static_cast<double>(p - 1));
  }
  return xs;
}

SideFragment build_t1_side(std::span<const Rational> values, std::span<const double> breakpoints, Side side,
                           const CoreSupport& cs) {
  cs.validate();
  if (values.size() < 2 || values.size() != breakpoints.size()) {
    throw Error(ErrorKind::kDomain, "need one breakpoint per value (at least two)", "/positions");
  }
  if (values.front() != 0 || values.back() != 1) {
    throw Error(ErrorKind::kDomain, "side values must run from 0 to 1", "/values");
  }
  const double direction = side == Side::kLeft ? 1.0 : -1.0;
  if (std::abs(breakpoints.front() - support_edge(side, cs)) > kLevelTolerance ||
      std::abs(breakpoints.back() - core_edge(side, cs)) > kLevelTolerance) {
    throw Error(ErrorKind::kDomain, "breakpoints must start at the support edge and end at the core edge",
                "/positions");
  }
  SideFragment f{side, {}, {}};
  for (std::size_t r = 0; r < values.size(); ++r) {
    if (r > 0 && !(values[r] > values[r - 1])) {
      throw Error(ErrorKind::kDomain, "side values must increase", "/values/" + std::to_string(r));
    }
    if (r > 0 && !((breakpoints[r] - breakpoints[r - 1]) * direction > 0.0)) {
      throw Error(ErrorKind::kDomain, "breakpoints must move strictly toward the core",
                  "/positions/" + std::to_string(r));
    }
    f.xs.push_back(breakpoints[r]);
    f.memberships.push_back(to_double(values[r]));
  }
  f.xs.front() = support_edge(side, cs);
  f.xs.back() = core_edge(side, cs);
  return f;
}

PiecewiseMF assemble(const std::optional<SideFragment>& left, const std::optional<SideFragment>& right,
                     const CoreSupport& cs) {
  cs.validate();
  const SideFragment l = left.value_or(straight(Side::kLeft, cs));
  const SideFragment r = right.value_or(straight(Side::kRight, cs));
  std::vector<double> raw(l.memberships.begin(), l.memberships.end());
  raw.insert(raw.end(), r.memberships.begin(), r.memberships.end());
  std::sort(raw.begin(), raw.end());
  std::vector<double> levels;
  for (double a : raw) {
    if (levels.empty() || a - levels.back() > kLevelTolerance) levels.push_back(a);
  }
  std::vector<Interval> cuts;
  for (double a : levels) cuts.push_back({inverse(l, a), inverse(r, a)});
  return PiecewiseMF(AlphaLevels(levels), std::move(cuts));
}

it2::IT2MF envelope_it2(std::span<const PiecewiseMF> family) {
  if (family.empty()) throw Error(ErrorKind::kDomain, "empty family");
  double core_lo = family.front().core().lo;
  double core_hi = family.front().core().hi;
  AlphaLevels levels = family.front().levels();
  for (const auto& f : family) {
    core_lo = std::max(core_lo, f.core().lo);
    core_hi = std::min(core_hi, f.core().hi);
    levels = AlphaLevels::merge(levels, f.levels());
  }
  if (core_lo > core_hi + kLevelTolerance) {
    throw Error(ErrorKind::kDomain, "family members share no core point");
  }

  // Every member is linear in alpha between merged levels, so the envelope
  // only needs the levels where the extreme member changes.
  auto cuts_at = [&](double a) {
    std::vector<Interval> cs;
    for (const auto& f : family) cs.push_back(f.alpha_cut(a));
    return cs;
  };
  std::vector<double> extra;
  const auto lv = levels.values();
  auto prev = cuts_at(lv[0]);
  for (std::size_t i = 0; i + 1 < lv.size(); ++i) {
    auto next = cuts_at(lv[i + 1]);
    std::vector<double> lo0, lo1, hi0, hi1;
    for (std::size_t k = 0; k < family.size(); ++k) {
      lo0.push_back(prev[k].lo);
      lo1.push_back(next[k].lo);
      hi0.push_back(prev[k].hi);
      hi1.push_back(next[k].hi);
    }
    for (bool take_max : {false, true}) {
      envelope_switches(lo0, lo1, lv[i], lv[i + 1], take_max, extra);
      envelope_switches(hi0, hi1, lv[i], lv[i + 1], take_max, extra);
    }
    prev = std::move(next);
  }
  if (!extra.empty()) {
    std::sort(extra.begin(), extra.end());
    extra.insert(extra.begin(), 0.0);
    extra.push_back(1.0);
    std::vector<double> unique;
    for (double a : extra) {
      if (unique.empty() || a - unique.back() > kLevelTolerance) unique.push_back(a);
    }
    unique.back() = 1.0;
    levels = AlphaLevels::merge(levels, AlphaLevels(unique));
  }

  std::vector<Interval> lower, upper;
  for (double a : levels.values()) {
    const auto cs = cuts_at(a);
    Interval lo{cs.front().lo, cs.front().hi};
    Interval up = lo;
    for (const auto& c : cs) {
      lo = {std::max(lo.lo, c.lo), std::min(lo.hi, c.hi)};
      up = {std::min(up.lo, c.lo), std::max(up.hi, c.hi)};
    }
    if (lo.lo > lo.hi) lo.lo = lo.hi = 0.5 * (lo.lo + lo.hi);
    lower.push_back(lo);
    upper.push_back(up);
  }
  return it2::IT2MF(PiecewiseMF(levels, std::move(lower)).compress(), PiecewiseMF(levels, std::move(upper)).compress());
}

}  // namespace docit2::elicitation
