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

#include "docit2/io/codec.hpp"

#include "docit2/error.hpp"

namespace docit2::io {

using namespace elicitation;

namespace {

Json rational(const Rational& q) { return to_string(q); }

Json outline_json(const fuzzy::PiecewiseMF& mf) {
  Json out = Json::array();
  for (const auto& [x, m] : mf.outline()) out.push_back({x, m});
  return out;
}

std::vector<double> fixed_doubles(const Json& j, const std::string& path, std::size_t n) {
  auto v = json::as_doubles(j, path);
  if (v.size() != n) json::fail(path, "expected " + std::to_string(n) + " numbers");
  return v;
}

Json label_json(const LabelArtifacts& a, bool core_support_known) {
  Json j{{"label", a.label},
         {"core_support", core_support_known ? to_json(a.core_support) : Json()},
         {"left", a.left ? to_json(*a.left) : Json()},
         {"right", a.right ? to_json(*a.right) : Json()}};
  j["family"] = Json::array();
  for (const auto& mf : a.family) j["family"].push_back(to_json(mf));
  j["it2"] = a.it2 ? to_json(*a.it2) : Json();
  return j;
}

std::string prompt(const SessionState& s) {
  const std::string label = s.current ? s.current->label : "";
  switch (s.phase) {
    case Phase::kLabelValues:
      return "Place blank cards between each pair of consecutive labels.";
    case Phase::kCoreSupport: {
      const auto p = s.dialog->next_probe();
      return "Is " + std::to_string(p->value) + " compatible with '" + label +
             "'? Answer yes_full, partial or no.";
    }
    case Phase::kSideCards:
      return "Place blank cards between the points of the " + std::string(to_string(*s.side)) + " side of '" +
             label + "', from the support edge to the core edge.";
    case Phase::kRatioReview:
      return "Do these ratios match your judgement? Accept them or modify cells.";
    case Phase::kAdjusting:
      return "The values were refitted to the revised ratios; present them for review.";
    case Phase::kSideDone:
      return "The " + std::string(to_string(*s.side)) + " side of '" + label + "' is settled.";
    case Phase::kAssembled:
      return "Labels assembled. Start another label or export the session.";
  }
  return "";
}

}  // namespace

Json to_json(const fuzzy::Interval& i) { return {i.lo, i.hi}; }

fuzzy::Interval interval_from_json(const Json& j, const std::string& path) {
  const auto v = fixed_doubles(j, path, 2);
  return {v[0], v[1]};
}

Json to_json(const fuzzy::PiecewiseMF& mf) {
  Json cuts = Json::array();
  for (const auto& c : mf.cuts()) cuts.push_back(to_json(c));
  const auto lv = mf.levels().values();
  return {{"levels", std::vector<double>(lv.begin(), lv.end())}, {"cuts", cuts}};
}

fuzzy::PiecewiseMF mf_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) json::fail(path, "expected a membership function object");
  try {
    if (const auto* t = json::optional(j, "triangular")) {
      const auto v = fixed_doubles(*t, path + "/triangular", 3);
      return fuzzy::PiecewiseMF::triangular(v[0], v[1], v[2]);
    }
    if (const auto* t = json::optional(j, "trapezoidal")) {
      const auto v = fixed_doubles(*t, path + "/trapezoidal", 4);
      return fuzzy::PiecewiseMF::trapezoidal(v[0], v[1], v[2], v[3]);
    }
    if (const auto* t = json::optional(j, "point")) return fuzzy::PiecewiseMF::point(json::as_double(*t, path + "/point"));
    const auto levels = json::as_doubles(json::require(j, "levels", path), path + "/levels");
    const auto& raw = json::as_array(json::require(j, "cuts", path), path + "/cuts");
    std::vector<fuzzy::Interval> cuts;
    for (std::size_t i = 0; i < raw.size(); ++i) cuts.push_back(interval_from_json(raw[i], json::child(path + "/cuts", i)));
    return fuzzy::PiecewiseMF(fuzzy::AlphaLevels(levels), std::move(cuts));
  } catch (const Error& e) {
    if (!e.path().empty()) throw;
    throw Error(e.kind(), e.what(), path);
  }
}

Json to_json(const it2::IT2MF& mf) { return {{"lower", to_json(mf.lower())}, {"upper", to_json(mf.upper())}}; }

it2::IT2MF it2_from_json(const Json& j, const std::string& path) {
  if (j.is_object() && j.contains("lower")) {
    auto lower = mf_from_json(json::require(j, "lower", path), path + "/lower");
    auto upper = mf_from_json(json::require(j, "upper", path), path + "/upper");
    try {
      return it2::IT2MF(std::move(lower), std::move(upper));
    } catch (const Error& e) {
      throw Error(e.kind(), e.what(), path);
    }
  }
  return it2::IT2MF::from_t1(mf_from_json(j, path));
}

Json to_json(const CardGap& g) {
  if (g.is_exact()) return g.lo();
  return {g.lo(), g.hi()};
}

CardGap gap_from_json(const Json& j, const std::string& path) {
  try {
    if (j.is_array()) {
      if (j.size() != 2) json::fail(path, "expected [lo, hi]");
      return CardGap::interval(json::as_int(j[0], path + "/0"), json::as_int(j[1], path + "/1"));
    }
    return CardGap::exact(json::as_int(j, path));
  } catch (const Error& e) {
    if (!e.path().empty()) throw;
    throw Error(e.kind(), e.what(), path);
  }
}

Json to_json(const CardChain& c) {
  Json gaps = Json::array();
  for (const auto& g : c.gaps) gaps.push_back(to_json(g));
  return {{"items", c.items}, {"gaps", gaps}};
}

CardChain chain_from_json(const Json& j, const std::string& path) {
  CardChain c;
  const auto& gaps = json::as_array(json::require(j, "gaps", path), path + "/gaps");
  for (std::size_t i = 0; i < gaps.size(); ++i) c.gaps.push_back(gap_from_json(gaps[i], json::child(path + "/gaps", i)));
  if (const auto* items = json::optional(j, "items")) {
    c.items = json::as_strings(*items, path + "/items");
  } else {
    c.items = CardChain::anonymous(c.gaps).items;
  }
  try {
    c.validate();
  } catch (const Error& e) {
    throw Error(e.kind(), e.what(), path);
  }
  return c;
}

Json to_json(const RatioTable& t) {
  Json cells = Json::array();
  for (const auto& [key, e] : t.entries()) {
    cells.push_back({{"s", key.first + 1}, {"r", key.second + 1}, {"value", rational(e.value)}, {"modified", e.modified}});
  }
  return {{"size", t.size()}, {"cells", cells}};
}

Json to_json(const ValueScale& s) {
  return {{"labels", s.labels}, {"values", json::rationals_to_json(s.values)}, {"card_value", rational(s.card_value)}};
}

Json to_json(const CoreSupport& cs) { return {{"support", to_json(cs.support)}, {"core", to_json(cs.core)}}; }

Json to_json(const CoreSupportDialog& d) {
  Json brackets = Json::object();
  for (auto b : {Boundary::kCoreLeft, Boundary::kSupportLeft, Boundary::kCoreRight, Boundary::kSupportRight}) {
    brackets[std::string(to_string(b))] = to_json(d.bracket(b));
  }
  Json probe;
  if (const auto p = d.next_probe()) probe = {{"boundary", std::string(to_string(p->boundary))}, {"value", p->value}};
  return {{"domain", to_json(d.domain())}, {"anchor", d.anchor()},          {"resolution", d.resolution()},
          {"brackets", brackets},          {"probes_answered", d.probes_answered()}, {"next_probe", probe}};
}

Json to_json(const SideResult& r) {
  Json memberships = Json::array();
  for (const auto& m : r.memberships) memberships.push_back(json::rationals_to_json(m));
  Json chains = Json::array();
  for (const auto& c : r.chains) chains.push_back(to_json(c));
  return {{"side", std::string(to_string(r.side))},
          {"vertical", r.vertical},
          {"positions", r.positions},
          {"memberships", memberships},
          {"chains", chains}};
}

Json to_json(const SideWork& w) {
  Json j{{"side", std::string(to_string(w.side))},
         {"chain", to_json(w.chain)},
         {"positions", w.positions},
         {"values", json::rationals_to_json(w.values)},
         {"table", to_json(w.table)},
         {"revisions", w.revisions}};
  j["adjustment"] = w.adjustment ? Json{{"values", json::rationals_to_json(w.adjustment->values)},
                                        {"objective", rational(w.adjustment->objective)}}
                                 : Json();
  j["suggested"] = w.suggested ? Json{{"gaps", w.suggested->gaps},
                                      {"total", w.suggested->total},
                                      {"objective", rational(w.suggested->objective)}}
                               : Json();
  return j;
}

Json to_json(const SessionConfig& c) {
  Json j{{"labels", c.labels},
         {"domain", to_json(c.domain)},
         {"adjust_orientation", c.orientation == AdjustOrientation::kLiteral ? "literal" : "ratio_definition"},
         {"h_max", c.h_max},
         {"enumeration_cap", c.enumeration_cap}};
  j["resolution"] = c.resolution ? Json(*c.resolution) : Json();
  return j;
}

SessionConfig config_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) json::fail(path, "expected a session configuration object");
  SessionConfig c;
  c.labels = json::as_strings(json::require(j, "labels", path), path + "/labels");
  if (const auto* d = json::optional(j, "domain")) c.domain = interval_from_json(*d, path + "/domain");
  if (const auto* r = json::optional(j, "resolution")) c.resolution = json::as_double(*r, path + "/resolution");
  if (const auto* o = json::optional(j, "adjust_orientation")) {
    const auto name = json::as_string(*o, path + "/adjust_orientation");
    if (name == "literal") {
      c.orientation = AdjustOrientation::kLiteral;
    } else if (name != "ratio_definition") {
      throw Error(ErrorKind::kConfiguration, "unknown adjust_orientation '" + name + "'", path + "/adjust_orientation");
    }
  }
  if (const auto* h = json::optional(j, "h_max")) c.h_max = json::as_int(*h, path + "/h_max");
  if (const auto* cap = json::optional(j, "enumeration_cap")) {
    const auto v = json::as_int(*cap, path + "/enumeration_cap");
    if (v < 1) throw Error(ErrorKind::kConfiguration, "enumeration cap must be positive", path + "/enumeration_cap");
    c.enumeration_cap = static_cast<std::size_t>(v);
  }
  try {
    c.validate();
  } catch (const Error& e) {
    throw Error(e.kind(), e.what(), path + e.path());
  }
  return c;
}

Json state_to_json(const SessionState& s) {
  Json j{{"phase", std::string(to_string(s.phase))}};
  j["side"] = s.side ? Json(std::string(to_string(*s.side))) : Json();
  j["scale"] = s.scale ? to_json(*s.scale) : Json();
  j["dialog"] = s.dialog ? to_json(*s.dialog) : Json();
  j["current"] = s.current ? label_json(*s.current, !s.dialog) : Json();
  j["work"] = s.work ? to_json(*s.work) : Json();
  j["labels"] = Json::object();
  for (const auto& [name, a] : s.labels) j["labels"][name] = label_json(a, true);
  Json log = Json::array();
  for (const auto& e : s.audit_log) {
    log.push_back({{"seq", e.seq},
                   {"ts", e.ts ? Json(*e.ts) : Json()},
                   {"actor", std::string(to_string(e.actor))},
                   {"type", e.event.at("type")}});
  }
  j["audit_log"] = log;
  return j;
}

Json artifacts_to_json(const SessionState& s) {
  Json j{{"value_scale", s.scale ? to_json(*s.scale) : Json()}, {"labels", Json::object()}};
  for (const auto& [name, a] : s.labels) {
    auto entry = label_json(a, true);
    entry["value"] = rational(s.scale->value_of(name));
    j["labels"][name] = entry;
  }
  return j;
}

Json session_view(const Session& session) {
  const auto& s = session.state();
  Json j = state_to_json(s);
  j["expected_events"] = expected_events(s.phase);
  j["prompt"] = prompt(s);
  j["probe"] = s.dialog ? to_json(*s.dialog)["next_probe"] : Json();
  Json preview;
  if (s.work && !s.work->values.empty() && s.phase != Phase::kSideDone) {
    try {
      const auto m = normalize(s.work->values);
      const auto frag = build_t1_side(m, s.work->positions, s.work->side, s.current->core_support);
      preview = {{"xs", frag.xs}, {"memberships", frag.memberships}};
    } catch (const Error&) {
      // Values that do not increase have no drawable side yet.
    }
  }
  j["side_preview"] = preview;
  j["previews"] = Json::object();
  for (const auto& [name, a] : s.labels) {
    Json family = Json::array();
    for (const auto& mf : a.family) family.push_back(outline_json(mf));
    j["previews"][name] = {{"family", family},
                           {"lower", outline_json(a.it2->lower())},
                           {"upper", outline_json(a.it2->upper())}};
  }
  return j;
}

it2::IT2OrderKind order_from_json(const Json& j, const std::string& path) {
  const auto v = json::as_int(j, path);
  if (v == 1) return it2::IT2OrderKind::kLowerFirst;
  if (v == 2) return it2::IT2OrderKind::kUpperFirst;
  throw Error(ErrorKind::kDomain, "order must be 1 or 2", path);
}

Json to_json(it2::Ordering o) { return std::string(it2::to_string(o)); }

}  // namespace docit2::io
