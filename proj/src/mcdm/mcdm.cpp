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

#include "docit2/mcdm/mcdm.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "docit2/error.hpp"

namespace docit2::mcdm {

namespace {

const fuzzy::Interval kUnit{0.0, 1.0};

bool inside_unit(const it2::IT2MF& mf) {
  return kUnit.contains(mf.upper().support(), fuzzy::kLevelTolerance);
}

std::string cell_path(std::size_t i, std::size_t j) {
  return "/matrix/" + std::to_string(i) + "/" + std::to_string(j);
}

}  // namespace

void LinguisticScale::validate() const {
  if (labels.empty()) throw Error(ErrorKind::kDomain, "scale '" + name + "' has no labels", "/scales/" + name);
  if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size()) {
    throw Error(ErrorKind::kDomain, "scale '" + name + "' repeats a label", "/scales/" + name + "/labels");
  }
  for (const auto& [label, mf] : bindings) {
    if (std::find(labels.begin(), labels.end(), label) == labels.end()) {
      throw Error(ErrorKind::kDomain, "scale '" + name + "' binds unknown label '" + label + "'",
                  "/scales/" + name + "/bindings/" + label);
    }
    if (!inside_unit(mf)) {
      throw Error(ErrorKind::kDomain, "label '" + label + "' of scale '" + name + "' leaves [0,1]",
                  "/scales/" + name + "/bindings/" + label);
    }
  }
  if (values && values->labels != labels) {
    throw Error(ErrorKind::kDomain, "scale '" + name + "' lists its labels out of value order",
                "/scales/" + name + "/labels");
  }
}

const it2::IT2MF& LinguisticScale::bound(const std::string& label) const {
  const auto it = bindings.find(label);
  if (it == bindings.end()) {
    const bool known = std::find(labels.begin(), labels.end(), label) != labels.end();
    throw Error(ErrorKind::kConfiguration,
                known ? "label '" + label + "' of scale '" + name + "' is not bound to a membership function"
                      : "label '" + label + "' is not on scale '" + name + "'");
  }
  return it->second;
}

void DecisionProblem::validate() const {
  if (alternatives.empty()) throw Error(ErrorKind::kIncompleteData, "no alternatives", "/alternatives");
  if (criteria.empty()) throw Error(ErrorKind::kIncompleteData, "no criteria", "/criteria");
  for (std::size_t j = 0; j < criteria.size(); ++j) {
    const auto& c = criteria[j];
    const auto path = "/criteria/" + std::to_string(j);
    if (!c.scale && !c.range) {
      throw Error(ErrorKind::kConfiguration, "criterion '" + c.name + "' has neither a scale nor a range", path);
    }
    if (c.scale && *c.scale >= scales.size()) throw Error(ErrorKind::kConfiguration, "unknown scale", path + "/scale");
    if (c.range && !(c.range->lo < c.range->hi)) {
      throw Error(ErrorKind::kDomain, "criterion range must have positive width", path + "/range");
    }
  }
  for (const auto& s : scales) s.validate();
  if (matrix.size() != alternatives.size()) {
    throw Error(ErrorKind::kIncompleteData, "the matrix needs one row per alternative", "/matrix");
  }
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    if (matrix[i].size() != criteria.size()) {
      throw Error(ErrorKind::kIncompleteData, "row '" + alternatives[i] + "' needs one cell per criterion",
                  "/matrix/" + std::to_string(i));
    }
  }
  if (weights.size() != criteria.size()) {
    throw Error(ErrorKind::kInvalidWeights, "one weight per criterion is required", "/weights");
  }
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (!(weights[j] >= 0.0) || !std::isfinite(weights[j])) {
      throw Error(ErrorKind::kInvalidWeights, "weights must be non-negative", "/weights/" + std::to_string(j));
    }
  }
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (std::abs(total - 1.0) > fuzzy::kLevelTolerance) {
    throw Error(ErrorKind::kInvalidWeights, "weights sum to " + std::to_string(total) + ", not 1", "/weights");
  }
}

it2::IT2MF resolve_cell(const DecisionProblem& p, std::size_t i, std::size_t j) {
  const auto& c = p.criteria[j];
  const auto& cell = p.matrix[i][j];
  try {
    if (const auto* label = std::get_if<std::string>(&cell)) {
      if (!c.scale) throw Error(ErrorKind::kConfiguration, "criterion '" + c.name + "' has no linguistic scale");
      return p.scales[*c.scale].bound(*label);
    }
    if (const auto* mf = std::get_if<it2::IT2MF>(&cell)) {
      if (!inside_unit(*mf)) throw Error(ErrorKind::kDomain, "membership function leaves [0,1]");
      return *mf;
    }
    const double x = std::get<double>(cell);
    if (!c.range) throw Error(ErrorKind::kConfiguration, "criterion '" + c.name + "' has no numeric range");
    if (!c.range->contains(x)) throw Error(ErrorKind::kDomain, "value outside the criterion range");
    return it2::IT2MF::from_t1(fuzzy::PiecewiseMF::point((x - c.range->lo) / c.range->width()));
  } catch (const Error& e) {
    throw Error(e.kind(), e.what(), cell_path(i, j));
  }
}

it2::IT2MF score_alternative(const DecisionProblem& p, std::size_t alternative) {
  std::vector<it2::IT2MF> row;
  row.reserve(p.criteria.size());
  for (std::size_t j = 0; j < p.criteria.size(); ++j) row.push_back(resolve_cell(p, alternative, j));
  return it2::it2_weighted_average(row, p.weights);
}

Ranking rank(const DecisionProblem& p, it2::IT2OrderKind order) {
  p.validate();
  Ranking out{order, {}, {}};
  for (std::size_t i = 0; i < p.alternatives.size(); ++i) out.scores.push_back(score_alternative(p, i));
  std::vector<std::size_t> idx(p.alternatives.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return it2::it2_compare(order, out.scores[a], out.scores[b]) == it2::Ordering::kGreater;
  });
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (k > 0 && it2::it2_compare(order, out.scores[idx[k - 1]], out.scores[idx[k]]) == it2::Ordering::kEqual) {
      out.classes.back().push_back(p.alternatives[idx[k]]);
    } else {
      out.classes.push_back({p.alternatives[idx[k]]});
    }
  }
  return out;
}

std::vector<double> weights_for_criteria(const std::vector<Criterion>& criteria, const elicitation::CardChain& chain,
                                         bool worst_is_zero) {
  chain.validate();
  if (chain.items.size() != criteria.size()) {
    throw Error(ErrorKind::kDomain, "the weight chain must name every criterion once", "/weights/items");
  }
  const auto w = elicitation::weights_from_cards(chain, worst_is_zero);
  std::vector<double> out(criteria.size(), -1.0);
  for (std::size_t k = 0; k < chain.items.size(); ++k) {
    const auto it = std::find_if(criteria.begin(), criteria.end(),
                                 [&](const Criterion& c) { return c.name == chain.items[k]; });
    if (it == criteria.end()) {
      throw Error(ErrorKind::kDomain, "unknown criterion '" + chain.items[k] + "'", "/weights/items/" + std::to_string(k));
    }
    auto& slot = out[static_cast<std::size_t>(it - criteria.begin())];
    if (slot >= 0.0) {
      throw Error(ErrorKind::kDomain, "criterion '" + chain.items[k] + "' appears twice", "/weights/items/" + std::to_string(k));
    }
    slot = to_double(w[k]);
  }
  return out;
}

}  // namespace docit2::mcdm
