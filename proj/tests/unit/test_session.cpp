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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "docit2/elicitation/session.hpp"
#include "docit2/error.hpp"

using namespace docit2;
using namespace docit2::elicitation;
using json::Json;
using Q = std::vector<Rational>;

namespace {

SessionConfig three_labels() {
  SessionConfig c;
  c.labels = {"low", "mid", "high"};
  return c;
}

ErrorKind kind_of(Session& s, const Json& ev) {
  try {
    s.apply(ev);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::kInternal;
}

// Mid label with both sides non-degenerate, core/support set by the analyst.
std::vector<Json> mid_prefix() {
  return {
      {{"type", "label_gaps"}, {"gaps", {1, 4}}, {"label", "mid"}, {"ts", "t0"}},
      {{"type", "set_core_support"}, {"support", {0.1, 0.6}}, {"core", {0.25, 0.3}}},
  };
}

}  // namespace

TEST_CASE("label values and anchor come from the label cards") {
  Session s(three_labels());
  s.apply(Json{{"type", "label_gaps"}, {"gaps", {1, 4}}, {"label", "mid"}});
  const auto& st = s.state();
  CHECK(st.phase == Phase::kCoreSupport);
  CHECK(st.scale->value_of("mid") == Rational(2) / 7);
  CHECK(st.dialog->anchor() == doctest::Approx(2.0 / 7.0));
  CHECK(st.current->label == "mid");
}

TEST_CASE("accepting the suggested ratios yields the normalized card values") {
  Session s(three_labels());
  for (const auto& e : mid_prefix()) s.apply(e);
  CHECK(s.state().phase == Phase::kSideCards);
  CHECK(*s.state().side == Side::kLeft);
  s.apply(Json{{"type", "place_cards"}, {"gaps", {1, 4}}});
  CHECK(s.state().phase == Phase::kRatioReview);
  CHECK(s.state().work->table.at(2, 1).value == Rational(7) / 2);
  s.apply(Json{{"type", "accept"}});
  CHECK(s.state().phase == Phase::kSideDone);
  const auto& left = *s.state().current->left;
  REQUIRE(left.memberships.size() == 1);
  CHECK(left.memberships[0] == Q{0, Rational(2) / 7, 1});
  CHECK(left.positions.front() == 0.1);
  CHECK(left.positions.back() == 0.25);

  s.apply(Json{{"type", "continue"}});
  CHECK(*s.state().side == Side::kRight);
  s.apply(Json{{"type", "place_cards"}, {"gaps", {0}}});
  s.apply(Json{{"type", "accept"}});
  s.apply(Json{{"type", "continue"}});
  const auto& st = s.state();
  CHECK(st.phase == Phase::kAssembled);
  REQUIRE(st.labels.count("mid") == 1);
  const auto& art = st.labels.at("mid");
  REQUIRE(art.family.size() == 1);
  CHECK(art.family[0].evaluate(0.6) == 0.0);
  CHECK(art.family[0].evaluate(0.27) == 1.0);
  CHECK(it2::same_function(*art.it2, it2::IT2MF::from_t1(art.family[0])));
  CHECK(st.audit_log.size() == 8);
  CHECK(st.audit_log.front().seq == 1);
  CHECK(*st.audit_log.front().ts == "t0");
  CHECK(st.audit_log[1].actor == Actor::kAnalyst);
}

TEST_CASE("a modified ratio is adjusted and presented as a fresh table") {
  Session s(three_labels());
  for (const auto& e : mid_prefix()) s.apply(e);
  s.apply(Json{{"type", "place_cards"}, {"gaps", {1, 4}}});
  s.apply(Json{{"type", "modify"}, {"entries", {{{"s", 3}, {"r", 2}, {"value", "3"}}}}});
  const auto& w = *s.state().work;
  CHECK(s.state().phase == Phase::kAdjusting);
  CHECK(w.table.at(2, 1).modified);
  CHECK(w.table.at(2, 1).value == 3);
  const auto expected = adjust_values(w.table, AdjustOrientation::kRatioDefinition);
  CHECK(w.adjustment->values == expected.values);
  // The adjusted values honour the revised ratio exactly.
  CHECK(w.adjustment->objective == 0);
  CHECK(w.adjustment->values[2] == 3 * w.adjustment->values[1]);
  REQUIRE(w.suggested.has_value());

  s.apply(Json{{"type", "present"}});
  const auto& after = *s.state().work;
  CHECK(s.state().phase == Phase::kRatioReview);
  CHECK(after.values == expected.values);
  CHECK(after.table == ratio_table(expected.values));
  CHECK_FALSE(after.table.any_modified());
  CHECK(after.revisions == 1);
  CHECK(after.chain.gaps.size() == 2);
  CHECK(after.chain.all_exact());

  s.apply(Json{{"type", "accept"}});
  CHECK(s.state().current->left->memberships[0] == Q{0, Rational(1) / 3, 1});
}

TEST_CASE("ratio cells are addressed from 1 and only above the first row") {
  Session s(three_labels());
  for (const auto& e : mid_prefix()) s.apply(e);
  s.apply(Json{{"type", "place_cards"}, {"gaps", {1, 4}}});
  CHECK(kind_of(s, Json{{"type", "modify"}, {"entries", {{{"s", 2}, {"r", 1}, {"value", 2}}}}}) == ErrorKind::kDomain);
  CHECK(kind_of(s, Json{{"type", "modify"}, {"entries", {{{"s", 3}, {"r", 2}, {"value", -1}}}}}) == ErrorKind::kDomain);
  CHECK(s.state().phase == Phase::kRatioReview);
}

TEST_CASE("hesitation intervals enumerate every chain and skip ratio review") {
  Session s(three_labels());
  for (const auto& e : mid_prefix()) s.apply(e);
  s.apply(Json{{"type", "place_cards"}, {"gaps", {1, {2, 4}}}});
  const auto& st = s.state();
  CHECK(st.phase == Phase::kSideDone);
  const auto& left = *st.current->left;
  REQUIRE(left.memberships.size() == 3);
  CHECK(left.memberships[0] == Q{0, Rational(2) / 5, 1});
  CHECK(left.memberships[2] == Q{0, Rational(2) / 7, 1});
  s.apply(Json{{"type", "continue"}});
  s.apply(Json{{"type", "place_cards"}, {"gaps", {{0, 1}}}});
  s.apply(Json{{"type", "continue"}});
  const auto& art = s.state().labels.at("mid");
  CHECK(art.family.size() == 6);
  REQUIRE(art.it2.has_value());
  CHECK(art.it2->upper().evaluate(0.25) == 1.0);
}

TEST_CASE("a vertical side is skipped") {
  Session s(three_labels());
  s.apply(Json{{"type", "label_gaps"}, {"gaps", {1, 4}}});
  s.apply(Json{{"type", "set_core_support"}, {"support", {0.0, 0.5}}, {"core", {0.0, 0.1}}});
  CHECK(s.state().phase == Phase::kSideCards);
  CHECK(*s.state().side == Side::kRight);
  CHECK(s.state().current->left->vertical);
}

TEST_CASE("the probing dialogue settles core and support") {
  Session s(three_labels());
  s.apply(Json{{"type", "label_gaps"}, {"gaps", {1, 4}}, {"label", "mid"}});
  const CoreSupport hidden{{0.1, 0.6}, {0.25, 0.3}};
  int guard = 0;
  while (s.state().phase == Phase::kCoreSupport && ++guard < 200) {
    const double x = s.state().dialog->next_probe()->value;
    const char* a = hidden.core.contains(x) ? "yes_full" : hidden.support.contains(x) ? "partial" : "no";
    s.apply(Json{{"type", "probe_answer"}, {"answer", a}});
  }
  CHECK(s.state().phase == Phase::kSideCards);
  const auto& cs = s.state().current->core_support;
  CHECK(cs.support.lo == doctest::Approx(0.1).epsilon(0.01));
  CHECK(cs.core.hi == doctest::Approx(0.3).epsilon(0.02));
}

TEST_CASE("events outside their phase are protocol errors and change nothing") {
  Session s(three_labels());
  CHECK(kind_of(s, Json{{"type", "accept"}}) == ErrorKind::kProtocol);
  try {
    s.apply(Json{{"type", "continue"}});
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("expected one of: label_gaps") != std::string::npos);
  }
  CHECK(kind_of(s, Json{{"type", "label_gaps"}, {"gaps", {1, 4}}, {"actor", "analyst"}}) == ErrorKind::kProtocol);
  CHECK(kind_of(s, Json{{"type", "nonsense"}}) == ErrorKind::kParse);
  CHECK(kind_of(s, Json{{"type", "label_gaps"}, {"gaps", {1}}}) == ErrorKind::kDomain);
  CHECK(s.state().audit_log.empty());
  CHECK(s.state().phase == Phase::kLabelValues);
}

TEST_CASE("replay is deterministic and locates the failing event") {
  auto events = mid_prefix();
  events.push_back({{"type", "place_cards"}, {"gaps", {1, 4}}});
  events.push_back({{"type", "modify"}, {"entries", {{{"s", 3}, {"r", 2}, {"value", 5}}}}});
  events.push_back({{"type", "present"}});
  const auto a = Session::replay(three_labels(), events);
  const auto b = Session::replay(three_labels(), events);
  CHECK(a.state().work->values == b.state().work->values);
  CHECK(a.state().audit_log.size() == b.state().audit_log.size());

  events.push_back({{"type", "present"}});
  try {
    Session::replay(three_labels(), events);
    FAIL("expected a protocol error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kProtocol);
    CHECK(e.path() == "/events/5");
  }
}

TEST_CASE("configuration is validated") {
  SessionConfig c;
  c.labels = {"only"};
  CHECK_THROWS_AS(Session{c}, Error);
  c.labels = {"a", "a"};
  CHECK_THROWS_AS(Session{c}, Error);
  c.labels = {"a", "b"};
  c.domain = {1.0, 1.0};
  CHECK_THROWS_AS(Session{c}, Error);
}
