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

// Exact solvers for the two small optimisation problems behind ratio-table
// adjustment: a sum of absolute deviations |u - c v| over bounded-below
// variables, and an integer apportionment with unit minimum shares.

#ifndef DOCIT2_SOLVERS_SOLVERS_HPP_
#define DOCIT2_SOLVERS_SOLVERS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "docit2/rational.hpp"

namespace docit2::solvers {

/// |x[u] - c * x[v]|
struct AbsTerm {
  std::size_t u = 0;
  std::size_t v = 0;
  Rational c;
};

enum class Sense { kLessEqual, kEqual, kGreaterEqual };

struct LinearConstraint {
  std::vector<Rational> coefficients;  // one per variable
  Sense sense = Sense::kLessEqual;
  Rational rhs;
};

struct LPProblem {
  std::vector<Rational> lower_bounds;  // defines the number of variables
  std::vector<AbsTerm> terms;
  std::vector<LinearConstraint> constraints;
};

struct LPSolution {
  Rational objective;
  std::vector<Rational> x;
};

/// Minimises the sum of the terms. Among optimal points the
/// lexicographically smallest x is returned. Throws kDomain on malformed
/// input and kInternal if the problem is infeasible or unbounded.
LPSolution solve_abs_lp(const LPProblem& problem);

struct IntAllocProblem {
  std::vector<Rational> targets;
  std::int64_t total = 0;
};

struct IntAllocSolution {
  std::vector<std::int64_t> shares;
  Rational objective;  // sum |shares[i] - targets[i]|
};

/// Integer shares >= 1 summing to `total` that minimise the absolute
/// deviation from the targets; the lexicographically smallest optimum.
/// Throws kDomain when total < number of slots.
IntAllocSolution solve_int_alloc(const IntAllocProblem& problem);

}  // namespace docit2::solvers

#endif  // DOCIT2_SOLVERS_SOLVERS_HPP_
