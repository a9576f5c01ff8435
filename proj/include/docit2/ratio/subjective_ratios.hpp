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

// Checks and derivation for subjective membership ratios rho(x|y): how many
// times more x belongs to a label than y does. Memberships follow from the
// ratios only when the two representation conditions hold; violations are
// reported, never repaired.

#ifndef DOCIT2_RATIO_SUBJECTIVE_RATIOS_HPP_
#define DOCIT2_RATIO_SUBJECTIVE_RATIOS_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace docit2::ratio {

inline constexpr double kDefaultMultiplicativeTolerance = 0.05;

struct SubjectiveRatios {
  std::vector<std::string> universe;
  /// Reference elements; every (x, y) with y here and x in the universe
  /// must be rated (rho(y|y) = 1 is implicit).
  std::vector<std::string> support_members;
  std::map<std::pair<std::string, std::string>, double> ratios;

  /// rho(x|y); 1 when x == y. Throws kIncompleteData when absent.
  double at(const std::string& x, const std::string& y) const;

  /// Throws kIncompleteData listing every missing pair, kDomain on a
  /// non-positive ratio or a reference outside the universe.
  void validate() const;
};

/// x ranks at least as high as y against z but strictly lower against w.
struct IndependenceViolation {
  std::string x, y, z, w;
  friend bool operator==(const IndependenceViolation&, const IndependenceViolation&) = default;
};

struct MultiplicativeViolation {
  std::string x, y, z;
  double expected = 0.0;  // rho(x|y) * rho(y|z)
  double actual = 0.0;    // rho(x|z)
};

/// One entry per discordant pair {x, y} and pair of references {z, w},
/// oriented as the first quadruple met in universe/support order.
std::vector<IndependenceViolation> check_reference_independence(const SubjectiveRatios& rho);

/// Triples of distinct elements with |rho(x|z) - rho(x|y) rho(y|z)| above
/// tol * rho(x|z).
std::vector<MultiplicativeViolation> check_multiplicative(
    const SubjectiveRatios& rho, double tol = kDefaultMultiplicativeTolerance);

/// mu(x) = rho(x|w) / max_y rho(y|w). Throws kInconsistent, with the
/// violations in the message, when either check fails.
std::map<std::string, double> memberships_from_ratios(
    const SubjectiveRatios& rho, const std::string& w,
    double tol = kDefaultMultiplicativeTolerance);

}  // namespace docit2::ratio

#endif  // DOCIT2_RATIO_SUBJECTIVE_RATIOS_HPP_
