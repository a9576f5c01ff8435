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

#include "docit2/fuzzy/piecewise_mf.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "docit2/error.hpp"
#include "docit2/rational.hpp"

namespace docit2::fuzzy {

namespace {

[[noreturn]] void invalid_levels(const std::string& what) {
  throw Error(ErrorKind::kInvalidLevels, what);
}

double lerp(double a, double b, double t) { return a + t * (b - a); }

}  // namespace

AlphaLevels::AlphaLevels(std::vector<double> levels) : levels_(std::move(levels)) {
  if (levels_.size() < 2) invalid_levels("alpha levels need at least 0 and 1");
  for (double a : levels_) {
    if (!std::isfinite(a) || a < -kLevelTolerance || a > 1.0 + kLevelTolerance) {
      invalid_levels("alpha level outside [0,1]");
    }
  }
  if (std::abs(levels_.front()) > kLevelTolerance) invalid_levels("alpha levels must contain 0");
  if (std::abs(levels_.back() - 1.0) > kLevelTolerance) invalid_levels("alpha levels must contain 1");
  levels_.front() = 0.0;
  levels_.back() = 1.0;
  for (std::size_t i = 1; i < levels_.size(); ++i) {
    if (levels_[i] - levels_[i - 1] <= kLevelTolerance) {
      invalid_levels("alpha levels must be strictly ascending without duplicates");
    }
  }
}

AlphaLevels AlphaLevels::unit() { return AlphaLevels({0.0, 1.0}); }

AlphaLevels AlphaLevels::merge(const AlphaLevels& a, const AlphaLevels& b) {
  std::vector<double> out;
  out.reserve(a.size() + b.size());
  for (double x : a.levels_) out.push_back(x);
  for (double x : b.levels_) {
    if (!a.contains(x)) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  // b-only levels may still sit within tolerance of each other.
  std::vector<double> unique;
  for (double x : out) {
    if (unique.empty() || x - unique.back() > kLevelTolerance) unique.push_back(x);
  }
  return AlphaLevels(std::move(unique));
}

std::size_t AlphaLevels::find(double alpha) const {
  auto it = std::lower_bound(levels_.begin(), levels_.end(), alpha - kLevelTolerance);
  if (it != levels_.end() && std::abs(*it - alpha) <= kLevelTolerance) {
    return static_cast<std::size_t>(it - levels_.begin());
  }
  return npos;
}

bool AlphaLevels::includes(const AlphaLevels& other) const {
  return std::all_of(other.levels_.begin(), other.levels_.end(),
                     [this](double a) { return contains(a); });
}

PiecewiseMF::PiecewiseMF(AlphaLevels levels, std::vector<Interval> cuts)
    : levels_(std::move(levels)), cuts_(std::move(cuts)) {
  if (cuts_.size() != levels_.size()) {
    invalid_levels("one cut per alpha level required");
  }
  for (auto& c : cuts_) {
    if (!std::isfinite(c.lo) || !std::isfinite(c.hi)) {
      throw Error(ErrorKind::kDomain, "cut endpoints must be finite");
    }
    if (c.lo > c.hi + kLevelTolerance) {
      throw Error(ErrorKind::kDomain, "cut with lo > hi");
    }
    if (c.lo > c.hi) c.hi = c.lo;
  }
  for (std::size_t i = 1; i < cuts_.size(); ++i) {
    auto& inner = cuts_[i];
    const auto& outer = cuts_[i - 1];
    if (inner.lo < outer.lo - kLevelTolerance || inner.hi > outer.hi + kLevelTolerance) {
      throw Error(ErrorKind::kDomain, "alpha cuts are not nested");
    }
    inner.lo = std::max(inner.lo, outer.lo);
    inner.hi = std::min(inner.hi, outer.hi);
    if (inner.lo > inner.hi) inner.hi = inner.lo;
  }
}

PiecewiseMF PiecewiseMF::point(double x) {
  return PiecewiseMF(AlphaLevels::unit(), {{x, x}, {x, x}});
}

PiecewiseMF PiecewiseMF::triangular(double a, double b, double c) {
  return PiecewiseMF(AlphaLevels::unit(), {{a, c}, {b, b}});
}

PiecewiseMF PiecewiseMF::trapezoidal(double a, double b, double c, double d) {
  return PiecewiseMF(AlphaLevels::unit(), {{a, d}, {b, c}});
}

Interval PiecewiseMF::alpha_cut(double alpha) const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw Error(ErrorKind::kDomain, "alpha must lie in [0,1]");
  }
  const auto lv = levels_.values();
  auto it = std::lower_bound(lv.begin(), lv.end(), alpha);
  const auto i = static_cast<std::size_t>(it - lv.begin());
  if (lv[i] == alpha) return cuts_[i];
  // lv[i-1] < alpha < lv[i]
  const double t = (alpha - lv[i - 1]) / (lv[i] - lv[i - 1]);
  return {lerp(cuts_[i - 1].lo, cuts_[i].lo, t), lerp(cuts_[i - 1].hi, cuts_[i].hi, t)};
}

double PiecewiseMF::evaluate(double x) const {
  const Interval& supp = support();
  const Interval& kernel = core();
  if (x < supp.lo || x > supp.hi) return 0.0;
  if (kernel.contains(x)) return 1.0;
  const auto lv = levels_.values();
  std::size_t i = 0;
  double from = 0.0, to = 0.0;
  if (x < kernel.lo) {
    // Largest i with lo_i <= x; lo_{n-1} > x guarantees i < n-1.
    auto it = std::upper_bound(cuts_.begin(), cuts_.end(), x,
                               [](double v, const Interval& c) { return v < c.lo; });
    i = static_cast<std::size_t>(it - cuts_.begin()) - 1;
    from = cuts_[i].lo;
    to = cuts_[i + 1].lo;
  } else {
    // Largest i with hi_i >= x.
    auto it = std::upper_bound(cuts_.begin(), cuts_.end(), x,
                               [](double v, const Interval& c) { return v > c.hi; });
    i = static_cast<std::size_t>(it - cuts_.begin()) - 1;
    from = cuts_[i].hi;
    to = cuts_[i + 1].hi;
  }
  const double t = (x - from) / (to - from);
  return lerp(lv[i], lv[i + 1], t);
}

std::pair<double, double> PiecewiseMF::beta(const AlphaLevels& levels, double x) const {
  if (!levels.includes(levels_)) {
    invalid_levels("beta needs a level set containing every stored level");
  }
  if (!support().contains(x)) return {0.0, 0.0};
  if (core().contains(x)) return {1.0, 1.0};
  double b1 = 0.0;
  double b2 = 1.0;
  for (double a : levels.values()) {
    if (alpha_cut(a).contains(x)) {
      b1 = std::max(b1, a);
    } else {
      b2 = std::min(b2, a);
    }
  }
  return {b1, b2};
}

PiecewiseMF PiecewiseMF::refine(const AlphaLevels& levels) const {
  if (!levels.includes(levels_)) {
    invalid_levels("refine needs a superset of the stored levels");
  }
  std::vector<Interval> cuts;
  cuts.reserve(levels.size());
  for (double a : levels.values()) {
    const auto j = levels_.find(a);
    cuts.push_back(j != AlphaLevels::npos ? cuts_[j] : alpha_cut(a));
  }
  return PiecewiseMF(levels, std::move(cuts));
}

PiecewiseMF PiecewiseMF::compress() const {
  const auto lv = levels_.values();
  const std::size_t n = lv.size();
  std::vector<std::size_t> kept{0};
  auto on_segment = [&](std::size_t from, std::size_t to) {
    for (std::size_t k = from + 1; k < to; ++k) {
      const double t = (lv[k] - lv[from]) / (lv[to] - lv[from]);
      if (std::abs(lerp(cuts_[from].lo, cuts_[to].lo, t) - cuts_[k].lo) > kCompressTolerance ||
          std::abs(lerp(cuts_[from].hi, cuts_[to].hi, t) - cuts_[k].hi) > kCompressTolerance) {
        return false;
      }
    }
    return true;
  };
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (!on_segment(kept.back(), i + 1)) kept.push_back(i);
  }
  kept.push_back(n - 1);
  std::vector<double> levels;
  std::vector<Interval> cuts;
  for (std::size_t k : kept) {
    levels.push_back(lv[k]);
    cuts.push_back(cuts_[k]);
  }
  return PiecewiseMF(AlphaLevels(std::move(levels)), std::move(cuts));
}

std::vector<double> PiecewiseMF::knots() const {
  std::vector<double> xs;
  xs.reserve(2 * cuts_.size());
  for (const auto& c : cuts_) {
    xs.push_back(c.lo);
    xs.push_back(c.hi);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

std::vector<std::pair<double, double>> PiecewiseMF::outline() const {
  const auto lv = levels_.values();
  std::vector<std::pair<double, double>> pts;
  pts.reserve(2 * cuts_.size());
  for (std::size_t i = 0; i < cuts_.size(); ++i) pts.emplace_back(cuts_[i].lo, lv[i]);
  for (std::size_t i = cuts_.size(); i-- > 0;) {
    const std::pair<double, double> p{cuts_[i].hi, lv[i]};
    if (pts.back() != p) pts.push_back(p);
  }
  return pts;
}

PiecewiseMF add(const PiecewiseMF& a, const PiecewiseMF& b) {
  AlphaLevels levels = AlphaLevels::merge(a.levels(), b.levels());
  std::vector<Interval> cuts;
  cuts.reserve(levels.size());
  for (double alpha : levels.values()) {
    cuts.push_back(a.alpha_cut(alpha) + b.alpha_cut(alpha));
  }
  return PiecewiseMF(std::move(levels), std::move(cuts));
}

PiecewiseMF scale(double r, const PiecewiseMF& a) {
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw Error(ErrorKind::kDomain, "scalar must be a positive real");
  }
  std::vector<Interval> cuts;
  cuts.reserve(a.cuts().size());
  for (const auto& c : a.cuts()) cuts.push_back(r * c);
  return PiecewiseMF(a.levels(), std::move(cuts));
}

PiecewiseMF weighted_average(std::span<const PiecewiseMF> mfs,
                             std::span<const double> weights) {
  if (mfs.empty()) throw Error(ErrorKind::kDomain, "weighted average of nothing");
  if (mfs.size() != weights.size()) {
    throw Error(ErrorKind::kInvalidWeights, "one weight per membership function required");
  }
  double total = 0.0;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    const double w = weights[j];
    if (!(w >= 0.0 && w <= 1.0)) {
      throw Error(ErrorKind::kInvalidWeights, "weights must lie in [0,1]",
                  "/weights/" + std::to_string(j));
    }
    total += w;
  }
  if (std::abs(total - 1.0) > kLevelTolerance) {
    throw Error(ErrorKind::kInvalidWeights, "weights must sum to 1");
  }
  const Interval unit{0.0, 1.0};
  AlphaLevels levels = mfs[0].levels();
  for (std::size_t j = 0; j < mfs.size(); ++j) {
    if (!unit.contains(mfs[j].support(), kLevelTolerance)) {
      throw Error(ErrorKind::kDomain, "support outside [0,1]", "/items/" + std::to_string(j));
    }
    levels = AlphaLevels::merge(levels, mfs[j].levels());
  }
  std::vector<Interval> cuts;
  cuts.reserve(levels.size());
  for (double alpha : levels.values()) {
    Interval acc{0.0, 0.0};
    for (std::size_t j = 0; j < mfs.size(); ++j) acc = acc + weights[j] * mfs[j].alpha_cut(alpha);
    cuts.push_back(acc);
  }
  PiecewiseMF result(std::move(levels), std::move(cuts));
  if (!unit.contains(result.support(), kLevelTolerance)) {
    throw Error(ErrorKind::kDomain, "weighted average support escapes [0,1]");
  }
  return result;
}

ExactCut exact_alpha_cut(const PiecewiseMF& mf, const Rational& alpha) {
  const auto lv = mf.levels().values();
  const auto cuts = mf.cuts();
  for (std::size_t i = 0; i < lv.size(); ++i) {
    const Rational a(lv[i]);
    if (a == alpha) return {Rational(cuts[i].lo), Rational(cuts[i].hi)};
    if (a > alpha) {
      const Rational a0(lv[i - 1]);
      const Rational t = (alpha - a0) / (a - a0);
      const Rational lo0(cuts[i - 1].lo), hi0(cuts[i - 1].hi);
      return {lo0 + t * (Rational(cuts[i].lo) - lo0), hi0 + t * (Rational(cuts[i].hi) - hi0)};
    }
  }
  throw Error(ErrorKind::kInternal, "level above 1");
}

std::vector<Rational> exact_level_union(const PiecewiseMF& a, const PiecewiseMF& b) {
  std::vector<double> all(a.levels().values().begin(), a.levels().values().end());
  all.insert(all.end(), b.levels().values().begin(), b.levels().values().end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<Rational> out;
  out.reserve(all.size());
  for (double x : all) out.emplace_back(x);
  return out;
}

bool same_function(const PiecewiseMF& a, const PiecewiseMF& b) {
  for (const auto& alpha : exact_level_union(a, b)) {
    const ExactCut ca = exact_alpha_cut(a, alpha);
    const ExactCut cb = exact_alpha_cut(b, alpha);
    if (ca.lo != cb.lo || ca.hi != cb.hi) return false;
  }
  return true;
}

bool alpha_cut_leq(const PiecewiseMF& a, const PiecewiseMF& b) {
  for (const auto& alpha : exact_level_union(a, b)) {
    const ExactCut ca = exact_alpha_cut(a, alpha);
    const ExactCut cb = exact_alpha_cut(b, alpha);
    if (ca.lo > cb.lo || ca.hi > cb.hi) return false;
  }
  return true;
}

}  // namespace docit2::fuzzy
