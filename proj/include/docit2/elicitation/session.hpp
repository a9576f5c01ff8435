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

// The elicitation dialogue as an event-sourced state machine. Every change
// of state is caused by one event (posted by the decision maker, the
// analyst or the system) and recorded in the audit log, so folding the log
// from the initial state reproduces the session exactly.
//
// Phases and the events they accept:
//   LabelValues   label_gaps
//   CoreSupport   probe_answer, set_core_support, restart_boundary
//   SideCards     place_cards
//   RatioReview   accept, modify
//   Adjusting     present
//   SideDone      continue
//   Assembled     start_label

#ifndef DOCIT2_ELICITATION_SESSION_HPP_
#define DOCIT2_ELICITATION_SESSION_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "docit2/elicitation/cards.hpp"
#include "docit2/elicitation/core_support.hpp"
#include "docit2/elicitation/sides.hpp"
#include "docit2/it2/it2mf.hpp"
#include "docit2/json_fields.hpp"

namespace docit2::elicitation {

enum class Phase { kLabelValues, kCoreSupport, kSideCards, kRatioReview, kAdjusting, kSideDone, kAssembled };
enum class Actor { kDecisionMaker, kAnalyst, kSystem };

std::string_view to_string(Phase p);
std::string_view to_string(Actor a);
Actor parse_actor(std::string_view name);

struct SessionConfig {
  std::vector<std::string> labels;
  fuzzy::Interval domain{0.0, 1.0};
  std::optional<double> resolution;  // core/support bracket width; 1% of the domain by default
  AdjustOrientation orientation = AdjustOrientation::kRatioDefinition;
  std::int64_t h_max = 100;
  std::size_t enumeration_cap = kDefaultEnumerationCap;

  /// Throws kConfiguration.
  void validate() const;
};

struct Event {
  std::string type;
  Actor actor = Actor::kDecisionMaker;
  std::optional<std::string> ts;
  json::Json body;  // the full event object, actor filled in
};

/// Checks the type, fills in the default actor and rejects actors the type
/// does not allow (kProtocol).
Event parse_event(const json::Json& raw);

struct AuditEntry {
  std::uint64_t seq = 0;
  std::optional<std::string> ts;
  Actor actor = Actor::kDecisionMaker;
  json::Json event;
};

/// One side of the label being elicited.
struct SideWork {
  Side side = Side::kLeft;
  CardChain chain;  // as placed; may hold hesitation intervals
  std::vector<double> positions;
  std::vector<Rational> values;  // non-normalised values under review
  RatioTable table;
  std::optional<Adjustment> adjustment;
  std::optional<CardsFit> suggested;
  int revisions = 0;
};

struct SideResult {
  Side side = Side::kLeft;
  bool vertical = false;  // support edge equals core edge; no cards
  std::vector<double> positions;
  std::vector<std::vector<Rational>> memberships;  // one normalised vector per exact chain
  std::vector<CardChain> chains;
};

struct LabelArtifacts {
  std::string label;
  CoreSupport core_support;
  std::optional<SideResult> left;
  std::optional<SideResult> right;
  std::vector<fuzzy::PiecewiseMF> family;
  std::optional<it2::IT2MF> it2;
};

struct SessionState {
  Phase phase = Phase::kLabelValues;
  std::optional<Side> side;  // meaningful from SideCards to SideDone
  std::optional<ValueScale> scale;
  std::optional<CoreSupportDialog> dialog;
  std::optional<LabelArtifacts> current;
  std::optional<SideWork> work;
  std::map<std::string, LabelArtifacts> labels;  // assembled labels
  std::vector<AuditEntry> audit_log;
};

/// Event types legal in a phase.
std::vector<std::string> expected_events(Phase phase);

/// Pure transition. Throws kProtocol for an event the phase does not accept
/// (naming the expected ones) and validation errors for bad payloads.
SessionState session_transition(const SessionConfig& config, SessionState state, const Event& event);

class Session {
 public:
  explicit Session(SessionConfig config);

  const SessionConfig& config() const { return config_; }
  const SessionState& state() const { return state_; }

  /// Applies one event; on failure the session is unchanged.
  void apply(const json::Json& raw_event);

  /// Folds the events from the initial state. A failing event is reported
  /// with its index in the message and a path of the form /events/<i>.
  static Session replay(SessionConfig config, std::span<const json::Json> events);

 private:
  SessionConfig config_;
  SessionState state_;
};

}  // namespace docit2::elicitation

#endif  // DOCIT2_ELICITATION_SESSION_HPP_
