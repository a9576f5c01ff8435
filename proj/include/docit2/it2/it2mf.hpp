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

#ifndef DOCIT2_IT2_IT2MF_HPP_
#define DOCIT2_IT2_IT2MF_HPP_

#include <span>
#include <utility>
#include <vector>

#include "docit2/fuzzy/piecewise_mf.hpp"

namespace docit2::it2 {

/// Interval type-2 fuzzy number: a lower and an upper piecewise-linear
/// fuzzy number with lower(x) <= upper(x) everywhere.
class IT2MF {
 public:
  /// Throws kDomain unless lower is dominated by upper. Dominance is checked
  /// as cut containment at every level of the merged level set, which is
  /// equivalent to pointwise dominance for piecewise-linear cuts.
  IT2MF(fuzzy::PiecewiseMF lower, fuzzy::PiecewiseMF upper);

  /// Degenerate pair (lower == upper).
  static IT2MF from_t1(const fuzzy::PiecewiseMF& mf) { return IT2MF(mf, mf); }

  const fuzzy::PiecewiseMF& lower() const { return lower_; }
  const fuzzy::PiecewiseMF& upper() const { return upper_; }

  /// (lower(x), upper(x)).
  std::pair<double, double> evaluate(double x) const {
    return {lower_.evaluate(x), upper_.evaluate(x)};
  }

  /// Union of the knot abscissas of both components.
  std::vector<double> knots() const;

 private:
  fuzzy::PiecewiseMF lower_;
  fuzzy::PiecewiseMF upper_;
};

/// Pointwise dominance of `lower` by `upper` on the merged levels, with
/// `slack` on the cut endpoints.
bool dominated(const fuzzy::PiecewiseMF& lower, const fuzzy::PiecewiseMF& upper,
               double slack = fuzzy::kLevelTolerance);

struct IntervalPair {
  fuzzy::Interval lower;
  fuzzy::Interval upper;
};

/// (lower cut, upper cut); alpha = 0 yields the support closures.
IntervalPair it2_alpha_cut(const IT2MF& a, double alpha);

IT2MF it2_add(const IT2MF& a, const IT2MF& b);
IT2MF it2_scale(double r, const IT2MF& a);
IT2MF it2_weighted_average(std::span<const IT2MF> items, std::span<const double> weights);

bool same_function(const IT2MF& a, const IT2MF& b);

}  // namespace docit2::it2

#endif  // DOCIT2_IT2_IT2MF_HPP_
