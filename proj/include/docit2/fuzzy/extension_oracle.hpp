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

// Brute-force sup-min extension principle on rasterized supports. Test-only:
// nothing in the library depends on it.

#ifndef DOCIT2_FUZZY_EXTENSION_ORACLE_HPP_
#define DOCIT2_FUZZY_EXTENSION_ORACLE_HPP_

#include <vector>

#include "docit2/fuzzy/piecewise_mf.hpp"

namespace docit2::fuzzy {

enum class ExtensionOp { kSum, kProduct };

struct SampledMembership {
  double z = 0.0;
  double membership = 0.0;
};

/// For each output abscissa z (multiples of grid_step across the result's
/// support hull, plus every knot combination), the sup over candidate
/// decompositions of min(A(x), B(y)) where x + y = z (or x * y = z).
/// Candidates for x are the grid over supp(A) plus A's knots plus z minus
/// B's knots (z / B's knots for products). Sorted by z.
std::vector<SampledMembership> extension_oracle(const PiecewiseMF& a, const PiecewiseMF& b,
                                                ExtensionOp op, double grid_step);

/// Largest slope of the membership function (infinite at vertical jumps).
double lipschitz_bound(const PiecewiseMF& mf);

}  // namespace docit2::fuzzy

#endif  // DOCIT2_FUZZY_EXTENSION_ORACLE_HPP_
