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

#ifndef DOCIT2_MCDM_MCDM_HPP_
#define DOCIT2_MCDM_MCDM_HPP_

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "docit2/elicitation/cards.hpp"
#include "docit2/it2/it2mf.hpp"
#include "docit2/it2/order.hpp"

namespace docit2::mcdm {

/// Ordered labels of one criterion and the IT2 number bound to each.
struct LinguisticScale {
  std::string name;
  std::vector<std::string> labels;  // worst to best
  std::map<std::string, it2::IT2MF> bindings;
  std::optional<elicitation::ValueScale> values;

  /// Throws kDomain on duplicate labels, bindings for unknown labels or
  /// supports leaving [0,1].
  void validate() const;
  /// Throws kConfiguration naming the label when it is unknown or unbound.
  const it2::IT2MF& bound(const std::string& label) const;
};

struct Criterion {
  std::string name;
  std::optional<std::size_t> scale;     // index into DecisionProblem::scales
  std::optional<fuzzy::Interval> range;  // numeric cells map affinely onto [0,1]
};

/// A matrix entry: a label of the criterion's scale, an IT2 number already
/// on [0,1], or a raw number on the criterion's range.
using Cell = std::variant<std::string, it2::IT2MF, double>;

struct DecisionProblem {
  std::vector<std::string> alternatives;
  std::vector<Criterion> criteria;
  std::vector<LinguisticScale> scales;
  std::vector<std::vector<Cell>> matrix;  // matrix[i][j]: alternative i on criterion j
  std::vector<double> weights;

  /// Throws kIncompleteData on a ragged matrix, kInvalidWeights unless the
  /// weights are non-negative and sum to 1, kConfiguration on a criterion
  /// with neither scale nor range.
  void validate() const;
};

/// The IT2 number of one cell.
it2::IT2MF resolve_cell(const DecisionProblem& p, std::size_t alternative, std::size_t criterion);

/// Weighted average of the alternative's row.
it2::IT2MF score_alternative(const DecisionProblem& p, std::size_t alternative);

struct Ranking {
  it2::IT2OrderKind order;
  /// Best first; alternatives with equal scores share a class, listed in
  /// input order.
  std::vector<std::vector<std::string>> classes;
  std::vector<it2::IT2MF> scores;  // aligned with the problem's alternatives
};

Ranking rank(const DecisionProblem& p, it2::IT2OrderKind order);

/// Criterion weights from a card chain over criterion names (least relevant
/// first), returned in the problem's criterion order. Throws kDomain unless
/// the chain names every criterion exactly once.
std::vector<double> weights_for_criteria(const std::vector<Criterion>& criteria,
                                         const elicitation::CardChain& chain, bool worst_is_zero = true);

}  // namespace docit2::mcdm

#endif  // DOCIT2_MCDM_MCDM_HPP_
