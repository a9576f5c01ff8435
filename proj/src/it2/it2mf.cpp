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

#include "docit2/it2/it2mf.hpp"

#include <algorithm>
#include <string>

#include "docit2/error.hpp"

namespace docit2::it2 {

bool dominated(const fuzzy::PiecewiseMF& lower, const fuzzy::PiecewiseMF& upper, double slack) {
  const auto levels = fuzzy::AlphaLevels::merge(lower.levels(), upper.levels());
  for (double a : levels.values()) {
    if (!upper.alpha_cut(a).contains(lower.alpha_cut(a), slack)) return false;
  }
  return true;
}

IT2MF::IT2MF(fuzzy::PiecewiseMF lower, fuzzy::PiecewiseMF upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (!upper_.core().contains(lower_.core(), fuzzy::kLevelTolerance)) {
    throw Error(ErrorKind::kDomain, "lower core must lie inside the upper core");
  }
  if (!dominated(lower_, upper_)) {
    throw Error(ErrorKind::kDomain, "lower membership exceeds upper membership");
  }
}

std::vector<double> IT2MF::knots() const {
  auto xs = lower_.knots();
  const auto up = upper_.knots();
  xs.insert(xs.end(), up.begin(), up.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

IntervalPair it2_alpha_cut(const IT2MF& a, double alpha) {
  return {a.lower().alpha_cut(alpha), a.upper().alpha_cut(alpha)};
}

IT2MF it2_add(const IT2MF& a, const IT2MF& b) {
  return IT2MF(fuzzy::add(a.lower(), b.lower()), fuzzy::add(a.upper(), b.upper()));
}

IT2MF it2_scale(double r, const IT2MF& a) {
  return IT2MF(fuzzy::scale(r, a.lower()), fuzzy::scale(r, a.upper()));
}

IT2MF it2_weighted_average(std::span<const IT2MF> items, std::span<const double> weights) {
  std::vector<fuzzy::PiecewiseMF> lowers, uppers;
  lowers.reserve(items.size());
  uppers.reserve(items.size());
  for (const auto& it : items) {
    lowers.push_back(it.lower());
    uppers.push_back(it.upper());
  }
  return IT2MF(fuzzy::weighted_average(lowers, weights), fuzzy::weighted_average(uppers, weights));
}

bool same_function(const IT2MF& a, const IT2MF& b) {
  return fuzzy::same_function(a.lower(), b.lower()) && fuzzy::same_function(a.upper(), b.upper());
}

}  // namespace docit2::it2
