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

// Building a label's membership function from its two sides, and the
// interval type-2 envelope of a family of such functions.

#ifndef DOCIT2_ELICITATION_SIDES_HPP_
#define DOCIT2_ELICITATION_SIDES_HPP_

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "docit2/elicitation/core_support.hpp"
#include "docit2/fuzzy/piecewise_mf.hpp"
#include "docit2/it2/it2mf.hpp"
#include "docit2/rational.hpp"

namespace docit2::elicitation {

enum class Side { kLeft, kRight };

std::string_view to_string(Side s);

/// Membership values at domain positions, listed from the support edge
/// (membership 0) to the core edge (membership 1).
struct SideFragment {
  Side side = Side::kLeft;
  std::vector<double> xs;
  std::vector<double> memberships;
};

/// p positions evenly spaced from the support edge to the core edge.
std::vector<double> default_breakpoints(std::size_t p, Side side, const CoreSupport& cs);

/// Pairs normalised values (0 ... 1) with breakpoints. The breakpoints must
/// move strictly toward the core and start and end on the support and core
/// edges (within kLevelTolerance); throws kDomain otherwise.
SideFragment build_t1_side(std::span<const Rational> values, std::span<const double> breakpoints, Side side,
                           const CoreSupport& cs);

/// Joins two sides through the core. A missing side is the straight segment
/// from its support edge to its core edge (vertical when they coincide).
fuzzy::PiecewiseMF assemble(const std::optional<SideFragment>& left, const std::optional<SideFragment>& right,
                            const CoreSupport& cs);

/// Pointwise min (lower) and max (upper) over the family. All members must
/// share a core point; throws kDomain otherwise or on an empty family.
it2::IT2MF envelope_it2(std::span<const fuzzy::PiecewiseMF> family);

}  // namespace docit2::elicitation

#endif  // DOCIT2_ELICITATION_SIDES_HPP_
