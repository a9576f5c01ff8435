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

// Piecewise-linear fuzzy numbers stored as a finite alpha-level -> interval
// map. Between two stored levels every cut endpoint moves linearly in alpha,
// so the stored cuts determine the membership function completely and the
// arithmetic below is plain level-wise interval arithmetic.

#ifndef DOCIT2_FUZZY_PIECEWISE_MF_HPP_
#define DOCIT2_FUZZY_PIECEWISE_MF_HPP_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "docit2/rational.hpp"

namespace docit2::fuzzy {

/// Level equality and nestedness slack.
inline constexpr double kLevelTolerance = 1e-9;
/// Slack used by PiecewiseMF::compress.
inline constexpr double kCompressTolerance = 1e-12;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  double midpoint() const { return 0.5 * (lo + hi); }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& inner, double slack = 0.0) const {
    return lo <= inner.lo + slack && inner.hi <= hi + slack;
  }

  friend Interval operator+(const Interval& a, const Interval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
  }
  friend Interval operator*(double r, const Interval& a) {
    return {r * a.lo, r * a.hi};
  }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Strictly ascending alpha values in [0,1] that always include 0 and 1.
class AlphaLevels {
 public:
  /// Throws kInvalidLevels on a missing endpoint, duplicates (within
  /// kLevelTolerance) or unsorted input.
  explicit AlphaLevels(std::vector<double> levels);

  /// {0, 1}.
  static AlphaLevels unit();

  /// Sorted union; values closer than kLevelTolerance collapse to the one
  /// from `a`.
  static AlphaLevels merge(const AlphaLevels& a, const AlphaLevels& b);

  std::span<const double> values() const { return levels_; }
  std::size_t size() const { return levels_.size(); }
  double operator[](std::size_t i) const { return levels_[i]; }

  /// Index of the stored level equal to alpha (within tolerance), or npos.
  std::size_t find(double alpha) const;
  bool contains(double alpha) const { return find(alpha) != npos; }

  /// True when every level of `other` is present here.
  bool includes(const AlphaLevels& other) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  friend bool operator==(const AlphaLevels&, const AlphaLevels&) = default;

 private:
  std::vector<double> levels_;
};

class PiecewiseMF {
 public:
  /// Validates sizes, finiteness, lo <= hi and nestedness (kLevelTolerance);
  /// tolerated violations are clamped so the stored cuts nest exactly.
  PiecewiseMF(AlphaLevels levels, std::vector<Interval> cuts);

  static PiecewiseMF point(double x);
  static PiecewiseMF triangular(double a, double b, double c);
  static PiecewiseMF trapezoidal(double a, double b, double c, double d);

  const AlphaLevels& levels() const { return levels_; }
  std::span<const Interval> cuts() const { return cuts_; }

  /// Closure of the support (the 0-cut).
  const Interval& support() const { return cuts_.front(); }
  const Interval& core() const { return cuts_.back(); }

  Interval alpha_cut(double alpha) const;

  /// Membership degree. At a vertical jump the value on the core side wins.
  double evaluate(double x) const;

  /// (beta1, beta2): the largest level of `levels` whose cut contains x and
  /// the smallest whose cut does not; (0,0) off the support, (1,1) on the
  /// core. Throws kInvalidLevels if `levels` misses a stored level.
  std::pair<double, double> beta(const AlphaLevels& levels, double x) const;

  /// Same function expressed on a superset of the stored levels.
  PiecewiseMF refine(const AlphaLevels& levels) const;

  /// Drops interior levels whose cuts are linear interpolants of their kept
  /// neighbours (within kCompressTolerance).
  PiecewiseMF compress() const;

  /// Sorted distinct abscissas of all cut endpoints.
  std::vector<double> knots() const;

  /// Polyline of the membership graph: left side bottom-up, then right side
  /// top-down. Vertical jumps appear as two points with equal x; a point
  /// core is listed once.
  std::vector<std::pair<double, double>> outline() const;

 private:
  AlphaLevels levels_;
  std::vector<Interval> cuts_;
};

PiecewiseMF add(const PiecewiseMF& a, const PiecewiseMF& b);

/// r * A for r > 0 (kDomain otherwise).
PiecewiseMF scale(double r, const PiecewiseMF& a);

/// Sum of w_j * A^j for supports inside [0,1], w_j in [0,1], sum w = 1
/// (within kLevelTolerance).
PiecewiseMF weighted_average(std::span<const PiecewiseMF> mfs,
                             std::span<const double> weights);

struct ExactCut {
  Rational lo;
  Rational hi;
};

/// Cut at an exact level, interpolated in rational arithmetic from the
/// (exactly converted) stored doubles.
ExactCut exact_alpha_cut(const PiecewiseMF& mf, const Rational& alpha);

/// Sorted exact union of the stored levels of both functions.
std::vector<Rational> exact_level_union(const PiecewiseMF& a, const PiecewiseMF& b);

/// Exact equality of the membership functions, compared on the merged level
/// set in rational arithmetic.
bool same_function(const PiecewiseMF& a, const PiecewiseMF& b);

/// Componentwise alpha-cut order: lo and hi of `a` below those of `b` at
/// every level of the merged set.
bool alpha_cut_leq(const PiecewiseMF& a, const PiecewiseMF& b);

}  // namespace docit2::fuzzy

#endif  // DOCIT2_FUZZY_PIECEWISE_MF_HPP_
