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

// JSON encodings of the library types. Exact quantities (card values,
// ratios, memberships, weights) travel as "p/q" strings; domain positions
// and cut endpoints are binary doubles and travel as JSON numbers, which
// the serializer prints as shortest round-trip decimals.

#ifndef DOCIT2_IO_CODEC_HPP_
#define DOCIT2_IO_CODEC_HPP_

#include <string>

#include "docit2/elicitation/session.hpp"
#include "docit2/fuzzy/piecewise_mf.hpp"
#include "docit2/it2/it2mf.hpp"
#include "docit2/it2/order.hpp"
#include "docit2/json_fields.hpp"

namespace docit2::io {

using json::Json;

Json to_json(const fuzzy::Interval& i);
fuzzy::Interval interval_from_json(const Json& j, const std::string& path);

/// {"levels": [...], "cuts": [[lo, hi], ...]}, or one of the shorthands
/// {"triangular": [a, b, c]}, {"trapezoidal": [a, b, c, d]}, {"point": x}
/// on input.
Json to_json(const fuzzy::PiecewiseMF& mf);
fuzzy::PiecewiseMF mf_from_json(const Json& j, const std::string& path);

/// {"lower": mf, "upper": mf}; a plain type-1 encoding is read as a
/// degenerate pair.
Json to_json(const it2::IT2MF& mf);
it2::IT2MF it2_from_json(const Json& j, const std::string& path);

Json to_json(const elicitation::CardGap& g);  // e or [lo, hi]
elicitation::CardGap gap_from_json(const Json& j, const std::string& path);
Json to_json(const elicitation::CardChain& c);
elicitation::CardChain chain_from_json(const Json& j, const std::string& path);

/// Cells use the displayed 1-based indices: {"s": 3, "r": 2, ...}.
Json to_json(const elicitation::RatioTable& t);
Json to_json(const elicitation::ValueScale& s);
Json to_json(const elicitation::CoreSupport& cs);
Json to_json(const elicitation::CoreSupportDialog& d);
Json to_json(const elicitation::SideResult& r);
Json to_json(const elicitation::SideWork& w);

Json to_json(const elicitation::SessionConfig& c);
elicitation::SessionConfig config_from_json(const Json& j, const std::string& path);

/// Full state, as stored in the snapshot of a session document.
Json state_to_json(const elicitation::SessionState& s);

/// Elicited outputs: the value scale and every assembled label.
Json artifacts_to_json(const elicitation::SessionState& s);

/// What a client needs to drive the next step: the state plus the legal
/// events, a prompt, the pending probe and knot previews.
Json session_view(const elicitation::Session& session);

it2::IT2OrderKind order_from_json(const Json& j, const std::string& path);  // 1 or 2
Json to_json(it2::Ordering o);

}  // namespace docit2::io

#endif  // DOCIT2_IO_CODEC_HPP_
