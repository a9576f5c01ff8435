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

// Decision problem files and ranking reports.
//
// Problem file:
//   {
//     "alternatives": ["a1", "a2"],
//     "scales": {"quality": {"labels": [...], "bindings": {"low": <mf>, ...}},
//                "elicited": {"session": "path/to/file.docit2.json"}},
//     "criteria": [{"name": "q", "scale": "quality"}, {"name": "cost", "range": [0, 500]}],
//     "matrix": [["low", 120], ...],       // label, number or inline <mf>
//     "weights": [0.5, 0.5] | {"cards": {"items": [...], "gaps": [...]}, "worst_is_zero": true}
//   }
// A scale given by "session" (a path) or "document" (an inline session
// document) takes its labels, value scale and IT2 bindings from the
// elicited session; labels not yet assembled stay unbound.

#ifndef DOCIT2_MCDM_PROBLEM_IO_HPP_
#define DOCIT2_MCDM_PROBLEM_IO_HPP_

#include <functional>
#include <string>

#include "docit2/json_fields.hpp"
#include "docit2/mcdm/mcdm.hpp"

namespace docit2::mcdm {

/// Returns the contents of a referenced file; throws docit2::Error.
using FileReader = std::function<std::string(const std::string& path)>;

/// Without a reader, "session" references raise kConfiguration.
DecisionProblem problem_from_json(const json::Json& j, const FileReader& reader = {});

json::Json ranking_to_json(const Ranking& r);

/// Rankings under both orders (or only `order` when given), with scores.
json::Json rank_report(const DecisionProblem& p, std::optional<it2::IT2OrderKind> order = {});

/// "order,rank,alternative" rows; tied alternatives share a rank.
std::string ranking_csv(std::span<const Ranking> rankings);

std::string_view order_name(it2::IT2OrderKind k);  // "order_1" or "order_2"

}  // namespace docit2::mcdm

#endif  // DOCIT2_MCDM_PROBLEM_IO_HPP_
