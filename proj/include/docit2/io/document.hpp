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

// Session persistence. A session document stores the configuration, the
// event log, the state snapshot and the elicited artifacts; loading replays
// the log and insists on reproducing both stored sections.

#ifndef DOCIT2_IO_DOCUMENT_HPP_
#define DOCIT2_IO_DOCUMENT_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "docit2/elicitation/session.hpp"
#include "docit2/io/codec.hpp"

namespace docit2::io {

inline constexpr std::string_view kSessionSchema = "docit2.session";
inline constexpr std::string_view kEventLogSchema = "docit2.events";
inline constexpr int kSchemaVersion = 1;

Json document_json(const elicitation::Session& session);

/// Two-space indented JSON with a trailing newline.
std::string save_document(const elicitation::Session& session);

/// Throws kParse (with the byte offset) on malformed JSON, kMigration on an
/// unknown schema version, the failing event's error (path /events/<i>)
/// when the log does not replay and kInconsistent when the replay does not
/// reproduce the stored snapshot or artifacts.
elicitation::Session load_document(std::string_view text);

struct EventLog {
  elicitation::SessionConfig config;
  std::vector<Json> events;
};

/// JSON lines: a header {"schema", "schema_version", "config"} followed by
/// one event per line.
std::string write_event_log(const elicitation::Session& session);
std::string write_event_log(const EventLog& log);
EventLog read_event_log(std::string_view text);

/// Either format, told apart by the schema of the first JSON value.
elicitation::Session load_any(std::string_view text);

/// Parses one JSON text; kParse with the byte offset on failure.
Json parse_json(std::string_view text);

/// Knot tables for plotting: "x,membership" rows along the outline, and for
/// IT2 numbers "series,x,membership" rows for the lower then upper outline.
std::string knots_csv(const fuzzy::PiecewiseMF& mf);
std::string knots_csv(const it2::IT2MF& mf);

}  // namespace docit2::io

#endif  // DOCIT2_IO_DOCUMENT_HPP_
