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

#include "docit2/io/document.hpp"

#include "docit2/error.hpp"

namespace docit2::io {

using elicitation::Session;

namespace {

std::vector<Json> logged_events(const Session& session) {
  std::vector<Json> events;
  for (const auto& e : session.state().audit_log) events.push_back(e.event);
  return events;
}

void check_schema(const Json& header, std::string_view schema, const std::string& where) {
  const auto name = json::as_string(json::require(header, "schema", ""), "/schema");
  if (name != schema) {
    throw Error(ErrorKind::kParse, where + " has schema '" + name + "', expected '" + std::string(schema) + "'",
                "/schema");
  }
  const auto version = json::as_int(json::require(header, "schema_version", ""), "/schema_version");
  if (version != kSchemaVersion) {
    throw Error(ErrorKind::kMigration,
                "schema_version " + std::to_string(version) + " is not supported (this build reads version " +
                    std::to_string(kSchemaVersion) + ")",
                "/schema_version");
  }
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::kParse, "malformed JSON at byte " + std::to_string(e.byte), "");
  }
}

Json document_json(const Session& session) {
  return {{"schema", kSessionSchema},
          {"schema_version", kSchemaVersion},
          {"config", to_json(session.config())},
          {"events", logged_events(session)},
          {"snapshot", state_to_json(session.state())},
          {"artifacts", artifacts_to_json(session.state())}};
}

std::string save_document(const Session& session) { return document_json(session).dump(2) + "\n"; }

Session load_document(std::string_view text) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) throw Error(ErrorKind::kParse, "a session document must be a JSON object", "");
  check_schema(doc, kSessionSchema, "document");
  auto config = config_from_json(json::require(doc, "config", ""), "/config");
  const auto& events = json::as_array(json::require(doc, "events", ""), "/events");
  Session session = Session::replay(std::move(config), std::vector<Json>(events.begin(), events.end()));
  if (state_to_json(session.state()) != json::require(doc, "snapshot", "")) {
    throw Error(ErrorKind::kInconsistent, "replaying the events does not reproduce the snapshot", "/snapshot");
  }
  if (artifacts_to_json(session.state()) != json::require(doc, "artifacts", "")) {
    throw Error(ErrorKind::kInconsistent, "replaying the events does not reproduce the artifacts", "/artifacts");
  }
  return session;
}

std::string write_event_log(const EventLog& log) {
  std::string out = Json{{"schema", kEventLogSchema}, {"schema_version", kSchemaVersion}, {"config", to_json(log.config)}}
                        .dump() +
                    "\n";
  for (const auto& e : log.events) out += e.dump() + "\n";
  return out;
}

std::string write_event_log(const Session& session) { return write_event_log(EventLog{session.config(), logged_events(session)}); }

EventLog read_event_log(std::string_view text) {
  EventLog log;
  bool have_header = false;
  std::size_t offset = 0;
  std::size_t line_no = 0;
  while (offset < text.size()) {
    auto end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    const auto line = text.substr(offset, end - offset);
    const std::size_t line_start = offset;
    offset = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    Json value;
    try {
      value = Json::parse(line.begin(), line.end());
    } catch (const Json::parse_error& e) {
      throw Error(ErrorKind::kParse,
                  "malformed JSON on line " + std::to_string(line_no) + " at byte " +
                      std::to_string(line_start + e.byte),
                  "");
    }
    if (!have_header) {
      check_schema(value, kEventLogSchema, "event log");
      log.config = config_from_json(json::require(value, "config", ""), "/config");
      have_header = true;
    } else {
      log.events.push_back(std::move(value));
    }
  }
  if (!have_header) throw Error(ErrorKind::kParse, "empty event log", "");
  return log;
}

Session load_any(std::string_view text) {
  const auto first = text.substr(0, text.find('\n'));
  bool event_log = false;
  try {
    const Json head = Json::parse(first.begin(), first.end());
    event_log = head.is_object() && head.value("schema", "") == kEventLogSchema;
  } catch (const Json::parse_error&) {
    // A pretty-printed document does not parse line by line.
  }
  if (!event_log) return load_document(text);
  auto log = read_event_log(text);
  return Session::replay(std::move(log.config), log.events);
}

std::string knots_csv(const fuzzy::PiecewiseMF& mf) {
  std::string out = "x,membership\n";
  for (const auto& [x, m] : mf.outline()) out += shortest_decimal(x) + "," + shortest_decimal(m) + "\n";
  return out;
}

std::string knots_csv(const it2::IT2MF& mf) {
  std::string out = "series,x,membership\n";
  for (const auto& [x, m] : mf.lower().outline()) out += "lower," + shortest_decimal(x) + "," + shortest_decimal(m) + "\n";
  for (const auto& [x, m] : mf.upper().outline()) out += "upper," + shortest_decimal(x) + "," + shortest_decimal(m) + "\n";
  return out;
}

}  // namespace docit2::io
