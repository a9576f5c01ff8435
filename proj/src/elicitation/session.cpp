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

#include "docit2/elicitation/session.hpp"

#include <algorithm>
#include <set>

#include "docit2/error.hpp"

namespace docit2::elicitation {

using json::Json;

namespace {

struct EventRule {
  std::string_view type;
  Phase phase;
  std::vector<Actor> actors;  // the first one is the default
};

const std::vector<EventRule>& rules() {
  static const std::vector<EventRule> table{
      {"label_gaps", Phase::kLabelValues, {Actor::kDecisionMaker}},
      {"probe_answer", Phase::kCoreSupport, {Actor::kDecisionMaker}},
      {"set_core_support", Phase::kCoreSupport, {Actor::kAnalyst}},
      {"restart_boundary", Phase::kCoreSupport, {Actor::kAnalyst}},
      {"place_cards", Phase::kSideCards, {Actor::kDecisionMaker}},
      {"accept", Phase::kRatioReview, {Actor::kDecisionMaker}},
      {"modify", Phase::kRatioReview, {Actor::kDecisionMaker}},
      {"present", Phase::kAdjusting, {Actor::kSystem, Actor::kAnalyst}},
      {"continue", Phase::kSideDone, {Actor::kAnalyst}},
      {"start_label", Phase::kAssembled, {Actor::kAnalyst}},
  };
  return table;
}

const EventRule* find_rule(std::string_view type) {
  for (const auto& r : rules()) {
    if (r.type == type) return &r;
  }
  return nullptr;
}

std::string phase_name(const SessionState& s) {
  std::string name(to_string(s.phase));
  if (s.side && (s.phase == Phase::kSideCards || s.phase == Phase::kSideDone)) {
    name += "(" + std::string(to_string(*s.side)) + ")";
  }
  return name;
}

double edge(Side side, const fuzzy::Interval& i) { return side == Side::kLeft ? i.lo : i.hi; }

// Rational breakpoint values 0, 1/(p-1), ..., 1 used only to validate
// analyst-supplied positions before any cards are turned into values.
std::vector<Rational> uniform_values(std::size_t p) {
  std::vector<Rational> v;
  for (std::size_t r = 0; r < p; ++r) v.push_back(Rational(static_cast<long>(r)) / static_cast<long>(p - 1));
  return v;
}

void begin_label(const SessionConfig& config, SessionState& s, const std::string& label) {
  if (std::find(config.labels.begin(), config.labels.end(), label) == config.labels.end()) {
    throw Error(ErrorKind::kDomain, "unknown label '" + label + "'", "/label");
  }
  const double anchor = config.domain.lo + to_double(s.scale->value_of(label)) * config.domain.width();
  s.current = LabelArtifacts{label, {}, std::nullopt, std::nullopt, {}, std::nullopt};
  s.dialog = CoreSupportDialog(config.domain, anchor, config.resolution);
  s.work.reset();
  s.side.reset();
  s.phase = Phase::kCoreSupport;
}

void assemble_label(const SessionConfig& config, SessionState& s) {
  auto& cur = *s.current;
  const auto& cs = cur.core_support;
  auto fragments = [&](const std::optional<SideResult>& r) {
    std::vector<std::optional<SideFragment>> out;
    if (!r || r->vertical) {
      out.emplace_back(std::nullopt);
      return out;
    }
    for (const auto& m : r->memberships) out.emplace_back(build_t1_side(m, r->positions, r->side, cs));
    return out;
  };
  const auto lefts = fragments(cur.left);
  const auto rights = fragments(cur.right);
  const auto count = static_cast<std::uint64_t>(lefts.size()) * rights.size();
  if (count > config.enumeration_cap) {
    throw Error(ErrorKind::kTooManyChains, "the two sides yield " + std::to_string(count) +
                                               " membership functions, above the cap of " +
                                               std::to_string(config.enumeration_cap));
  }
  cur.family.clear();
  for (const auto& l : lefts) {
    for (const auto& r : rights) cur.family.push_back(assemble(l, r, cs));
  }
  cur.it2 = envelope_it2(cur.family);
  s.labels[cur.label] = cur;
  s.current.reset();
  s.work.reset();
  s.side.reset();
  s.phase = Phase::kAssembled;
}

void enter_side(const SessionConfig& config, SessionState& s, Side side) {
  auto& cur = *s.current;
  const auto& cs = cur.core_support;
  if (edge(side, cs.support) == edge(side, cs.core)) {
    SideResult vertical{side, true, {edge(side, cs.core)}, {}, {}};
    (side == Side::kLeft ? cur.left : cur.right) = vertical;
    if (side == Side::kLeft) return enter_side(config, s, Side::kRight);
    return assemble_label(config, s);
  }
  s.side = side;
  s.work.reset();
  s.phase = Phase::kSideCards;
}

void finish_core_support(const SessionConfig& config, SessionState& s, const CoreSupport& cs) {
  s.current->core_support = cs;
  s.dialog.reset();
  enter_side(config, s, Side::kLeft);
}

void on_label_gaps(const SessionConfig& config, SessionState& s, const Json& ev) {
  const auto& raw = json::as_array(json::require(ev, "gaps", ""), "/gaps");
  if (raw.size() + 1 != config.labels.size()) {
    throw Error(ErrorKind::kDomain,
                std::to_string(config.labels.size()) + " labels need " + std::to_string(config.labels.size() - 1) +
                    " gaps",
                "/gaps");
  }
  std::vector<CardGap> gaps;
  for (std::size_t i = 0; i < raw.size(); ++i) gaps.push_back(CardGap::exact(json::as_int(raw[i], json::child("/gaps", i))));
  s.scale = label_values(config.labels, gaps);
  const auto* label = json::optional(ev, "label");
  begin_label(config, s, label ? json::as_string(*label, "/label") : config.labels.front());
}

void on_probe_answer(const SessionConfig& config, SessionState& s, const Json& ev) {
  s.dialog->answer(parse_probe_answer(json::as_string(json::require(ev, "answer", ""), "/answer")));
  if (s.dialog->done()) finish_core_support(config, s, s.dialog->result());
}

fuzzy::Interval read_interval(const Json& ev, const std::string& key) {
  const std::string path = "/" + key;
  const auto v = json::as_doubles(json::require(ev, key, ""), path);
  if (v.size() != 2) throw Error(ErrorKind::kParse, "expected [lo, hi]", path);
  return {v[0], v[1]};
}

void on_set_core_support(const SessionConfig& config, SessionState& s, const Json& ev) {
  const CoreSupport cs{read_interval(ev, "support"), read_interval(ev, "core")};
  cs.validate();
  if (!config.domain.contains(cs.support)) throw Error(ErrorKind::kDomain, "support leaves the domain", "/support");
  finish_core_support(config, s, cs);
}

void on_restart_boundary(SessionState& s, const Json& ev) {
  s.dialog->restart(parse_boundary(json::as_string(json::require(ev, "boundary", ""), "/boundary")));
}

void on_place_cards(const SessionConfig& config, SessionState& s, const Json& ev) {
  const auto& raw = json::as_array(json::require(ev, "gaps", ""), "/gaps");
  SideWork work;
  work.side = *s.side;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto path = json::child("/gaps", i);
    if (raw[i].is_array()) {
      if (raw[i].size() != 2) throw Error(ErrorKind::kParse, "expected [lo, hi]", path);
      work.chain.gaps.push_back(CardGap::interval(json::as_int(raw[i][0], path + "/0"), json::as_int(raw[i][1], path + "/1")));
    } else {
      work.chain.gaps.push_back(CardGap::exact(json::as_int(raw[i], path)));
    }
  }
  const std::size_t p = work.chain.gaps.size() + 1;
  if (const auto* items = json::optional(ev, "items")) {
    work.chain.items = json::as_strings(*items, "/items");
  } else {
    work.chain.items = CardChain::anonymous(work.chain.gaps).items;
  }
  work.chain.validate();
  const auto& cs = s.current->core_support;
  if (const auto* pos = json::optional(ev, "positions")) {
    work.positions = json::as_doubles(*pos, "/positions");
  } else {
    work.positions = default_breakpoints(p, work.side, cs);
  }
  build_t1_side(uniform_values(p), work.positions, work.side, cs);

  if (work.chain.all_exact()) {
    work.values = nonnormalized_values(work.chain);
    work.table = ratio_table(work.values);
    s.work = std::move(work);
    s.phase = Phase::kRatioReview;
    return;
  }
  SideResult result{work.side, false, work.positions, {}, enumerate_chains(work.chain, config.enumeration_cap)};
  for (const auto& c : result.chains) result.memberships.push_back(normalize(nonnormalized_values(c)));
  (work.side == Side::kLeft ? s.current->left : s.current->right) = std::move(result);
  s.work = std::move(work);
  s.phase = Phase::kSideDone;
}

void on_accept(SessionState& s) {
  auto& work = *s.work;
  const auto memberships = normalize(work.values);
  // Rejects value vectors that no longer increase toward the core.
  build_t1_side(memberships, work.positions, work.side, s.current->core_support);
  SideResult result{work.side, false, work.positions, {memberships}, {work.chain}};
  (work.side == Side::kLeft ? s.current->left : s.current->right) = std::move(result);
  s.phase = Phase::kSideDone;
}

bool strictly_increasing_from_zero(const std::vector<Rational>& v) {
  if (v.empty() || v.front() != 0) return false;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] > v[i - 1])) return false;
  }
  return true;
}

void on_modify(const SessionConfig& config, SessionState& s, const Json& ev) {
  auto& work = *s.work;
  const auto& entries = json::as_array(json::require(ev, "entries", ""), "/entries");
  if (entries.empty()) throw Error(ErrorKind::kDomain, "no ratio was modified", "/entries");
  RatioTable table = work.table;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto path = json::child("/entries", i);
    // Cells are addressed as in a(s, r): 1-based, s > r >= 2.
    const auto sv = json::as_int(json::require(entries[i], "s", path), path + "/s");
    const auto rv = json::as_int(json::require(entries[i], "r", path), path + "/r");
    const auto value = json::as_rational(json::require(entries[i], "value", path), path + "/value");
    if (rv < 2 || sv <= rv || sv > static_cast<std::int64_t>(table.size())) {
      throw Error(ErrorKind::kDomain, "no ratio cell a(" + std::to_string(sv) + "," + std::to_string(rv) + ")", path);
    }
    try {
      table.modify(static_cast<std::size_t>(sv - 1), static_cast<std::size_t>(rv - 1), value);
    } catch (const Error& e) {
      throw Error(e.kind(), e.what(), path + "/value");
    }
  }
  work.table = std::move(table);
  work.adjustment = adjust_values(work.table, config.orientation);
  work.suggested.reset();
  if (strictly_increasing_from_zero(work.adjustment->values)) {
    const auto slots = static_cast<std::int64_t>(work.adjustment->values.size()) - 1;
    work.suggested = cards_from_values(work.adjustment->values, std::max(config.h_max, slots));
  }
  s.phase = Phase::kAdjusting;
}

void on_present(SessionState& s) {
  auto& work = *s.work;
  work.values = work.adjustment->values;
  work.table = ratio_table(work.values);
  if (work.suggested) {
    work.chain.gaps.clear();
    for (auto g : work.suggested->gaps) work.chain.gaps.push_back(CardGap::exact(g));
  }
  work.adjustment.reset();
  work.suggested.reset();
  ++work.revisions;
  s.phase = Phase::kRatioReview;
}

void on_continue(const SessionConfig& config, SessionState& s) {
  if (*s.side == Side::kLeft) return enter_side(config, s, Side::kRight);
  assemble_label(config, s);
}

}  // namespace

std::string_view to_string(Phase p) {
  switch (p) {
    case Phase::kLabelValues: return "LabelValues";
    case Phase::kCoreSupport: return "CoreSupport";
    case Phase::kSideCards: return "SideCards";
    case Phase::kRatioReview: return "RatioReview";
    case Phase::kAdjusting: return "Adjusting";
    case Phase::kSideDone: return "SideDone";
    case Phase::kAssembled: return "Assembled";
  }
  return "?";
}

std::string_view to_string(Actor a) {
  switch (a) {
    case Actor::kDecisionMaker: return "dm";
    case Actor::kAnalyst: return "analyst";
    case Actor::kSystem: return "system";
  }
  return "?";
}

Actor parse_actor(std::string_view name) {
  for (auto a : {Actor::kDecisionMaker, Actor::kAnalyst, Actor::kSystem}) {
    if (to_string(a) == name) return a;
  }
  throw Error(ErrorKind::kParse, "unknown actor '" + std::string(name) + "'", "/actor");
}

void SessionConfig::validate() const {
  if (labels.size() < 2) throw Error(ErrorKind::kConfiguration, "a scale needs at least two labels", "/labels");
  if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size()) {
    throw Error(ErrorKind::kConfiguration, "labels must be distinct", "/labels");
  }
  if (!(domain.lo < domain.hi)) throw Error(ErrorKind::kConfiguration, "domain must have positive width", "/domain");
  if (resolution && !(*resolution > 0.0)) {
    throw Error(ErrorKind::kConfiguration, "resolution must be positive", "/resolution");
  }
  if (h_max < 1) throw Error(ErrorKind::kConfiguration, "h_max must be positive", "/h_max");
  if (enumeration_cap < 1) {
    throw Error(ErrorKind::kConfiguration, "enumeration cap must be positive", "/enumeration_cap");
  }
}

Event parse_event(const Json& raw) {
  if (!raw.is_object()) throw Error(ErrorKind::kParse, "an event must be a JSON object", "");
  Event ev;
  ev.type = json::as_string(json::require(raw, "type", ""), "/type");
  const auto* rule = find_rule(ev.type);
  if (!rule) throw Error(ErrorKind::kParse, "unknown event type '" + ev.type + "'", "/type");
  ev.actor = rule->actors.front();
  if (const auto* a = json::optional(raw, "actor")) {
    ev.actor = parse_actor(json::as_string(*a, "/actor"));
    if (std::find(rule->actors.begin(), rule->actors.end(), ev.actor) == rule->actors.end()) {
      throw Error(ErrorKind::kProtocol,
                  "actor '" + std::string(to_string(ev.actor)) + "' may not post '" + ev.type + "'", "/actor");
    }
  }
  if (const auto* ts = json::optional(raw, "ts")) ev.ts = json::as_string(*ts, "/ts");
  ev.body = raw;
  ev.body["actor"] = std::string(to_string(ev.actor));
  return ev;
}

std::vector<std::string> expected_events(Phase phase) {
  std::vector<std::string> out;
  for (const auto& r : rules()) {
    if (r.phase == phase) out.emplace_back(r.type);
  }
  return out;
}

SessionState session_transition(const SessionConfig& config, SessionState s, const Event& event) {
  const auto* rule = find_rule(event.type);
  if (!rule) throw Error(ErrorKind::kParse, "unknown event type '" + event.type + "'", "/type");
  if (rule->phase != s.phase) {
    std::string expected;
    for (const auto& e : expected_events(s.phase)) expected += (expected.empty() ? "" : ", ") + e;
    throw Error(ErrorKind::kProtocol, "event '" + event.type + "' is not legal in phase " + phase_name(s) +
                                          "; expected one of: " + expected);
  }
  const Json& ev = event.body;
  if (event.type == "label_gaps") on_label_gaps(config, s, ev);
  else if (event.type == "probe_answer") on_probe_answer(config, s, ev);
  else if (event.type == "set_core_support") on_set_core_support(config, s, ev);
  else if (event.type == "restart_boundary") on_restart_boundary(s, ev);
  else if (event.type == "place_cards") on_place_cards(config, s, ev);
  else if (event.type == "accept") on_accept(s);
  else if (event.type == "modify") on_modify(config, s, ev);
  else if (event.type == "present") on_present(s);
  else if (event.type == "continue") on_continue(config, s);
  else if (event.type == "start_label") begin_label(config, s, json::as_string(json::require(ev, "label", ""), "/label"));

  s.audit_log.push_back(AuditEntry{s.audit_log.size() + 1, event.ts, event.actor, event.body});
  return s;
}

Session::Session(SessionConfig config) : config_(std::move(config)) { config_.validate(); }

void Session::apply(const Json& raw_event) {
  state_ = session_transition(config_, state_, parse_event(raw_event));
}

Session Session::replay(SessionConfig config, std::span<const Json> events) {
  Session session(std::move(config));
  for (std::size_t i = 0; i < events.size(); ++i) {
    try {
      session.apply(events[i]);
    } catch (const Error& e) {
      throw Error(e.kind(), "event " + std::to_string(i) + ": " + e.what(), "/events/" + std::to_string(i) + e.path());
    }
  }
  return session;
}

}  // namespace docit2::elicitation
