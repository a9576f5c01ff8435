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
#include <httplib.h>

#include <atomic>
#include <set>
#include <thread>

#include "docit2/io/document.hpp"
#include "docit2/service/service.hpp"

using namespace docit2;
using json::Json;
using service::Service;

namespace {

const Json kConfig{{"labels", {"low", "mid", "high"}}};

std::vector<Json> fig_events() {
  return {
      {{"type", "label_gaps"}, {"gaps", {1, 4}}, {"label", "mid"}},
      {{"type", "set_core_support"}, {"support", {0.1, 0.6}}, {"core", {0.25, 0.3}}},
      {{"type", "place_cards"}, {"gaps", {1, 4}}},
      {{"type", "accept"}},
  };
}

std::string create(Service& svc) {
  const auto r = svc.handle("POST", "/sessions", kConfig.dump());
  REQUIRE(r.status == 201);
  return Json::parse(r.body)["id"];
}

}  // namespace

TEST_CASE("a new session waits for the label cards") {
  Service svc;
  const auto id = create(svc);
  const auto r = svc.handle("GET", "/sessions/" + id, "");
  CHECK(r.status == 200);
  const auto view = Json::parse(r.body);
  CHECK(view["phase"] == "LabelValues");
  CHECK(view["expected_events"] == Json({"label_gaps"}));
}

TEST_CASE("posting the card events and accepting shows the memberships") {
  Service svc;
  const auto id = create(svc);
  Json view;
  for (const auto& e : fig_events()) {
    const auto r = svc.handle("POST", "/sessions/" + id + "/events", e.dump());
    REQUIRE(r.status == 200);
    view = Json::parse(r.body);
  }
  CHECK(view["phase"] == "SideDone");
  CHECK(view["current"]["left"]["memberships"][0] == Json({"0", "2/7", "1"}));
}

TEST_CASE("errors map onto status codes") {
  Service svc;
  const auto id = create(svc);
  auto r = svc.handle("POST", "/sessions/" + id + "/events", R"({"type": "accept"})");
  CHECK(r.status == 409);
  auto body = Json::parse(r.body);
  CHECK(body["error"]["kind"] == "protocol");
  CHECK(body["error"]["expected_events"] == Json({"label_gaps"}));
  CHECK(std::string(body["error"]["message"]).find("label_gaps") != std::string::npos);

  r = svc.handle("POST", "/sessions/" + id + "/events", R"({"type": "label_gaps", "gaps": [1, "x"]})");
  CHECK(r.status == 422);
  CHECK(Json::parse(r.body)["error"]["path"] == "/gaps/1");

  r = svc.handle("POST", "/sessions/" + id + "/events", "{not json");
  CHECK(r.status == 422);
  CHECK(Json::parse(r.body)["error"]["kind"] == "parse");

  CHECK(svc.handle("GET", "/sessions/nope", "").status == 404);
  CHECK(svc.handle("GET", "/sessions/nope/export", "").status == 404);
  CHECK(svc.handle("DELETE", "/sessions/" + id, "").status == 404);
  CHECK(svc.handle("POST", "/compute/divide", "{}").status == 404);
  r = svc.handle("POST", "/sessions", R"({"labels": ["only"]})");
  CHECK(r.status == 422);
  CHECK(Json::parse(r.body)["error"]["path"] == "/labels");
}

TEST_CASE("export equals the document replayed from the same events") {
  Service svc;
  const auto id = create(svc);
  const auto events = fig_events();
  for (const auto& e : events) svc.handle("POST", "/sessions/" + id + "/events", e.dump());
  const auto exported = svc.handle("GET", "/sessions/" + id + "/export", "");
  CHECK(exported.status == 200);
  const auto replayed = elicitation::Session::replay(io::config_from_json(kConfig, ""), events);
  CHECK(exported.body == io::save_document(replayed));
  CHECK(io::save_document(io::load_document(exported.body)) == exported.body);
}

TEST_CASE("service options fill the enumeration cap") {
  Service svc(service::Options{"127.0.0.1", 0, 5});
  const auto id = create(svc);
  const auto doc = Json::parse(svc.handle("GET", "/sessions/" + id + "/export", "").body);
  CHECK(doc["config"]["enumeration_cap"] == 5);
}

TEST_CASE("compute endpoints") {
  Service svc;
  const auto r = svc.handle("POST", "/compute/order",
                            R"({"a": {"triangular": [0, 1, 2]}, "b": {"triangular": [3, 4, 5]}})");
  CHECK(r.status == 200);
  CHECK(Json::parse(r.body)["result"] == "less");
  const auto bad = svc.handle("POST", "/compute/wa", R"({"items": [{"point": 0}], "weights": [2]})");
  CHECK(bad.status == 422);
  const auto file_ref = svc.handle("POST", "/compute/rank", R"({"alternatives": ["a"],
      "scales": {"s": {"session": "/etc/passwd"}}, "criteria": [{"name": "c", "scale": "s"}],
      "matrix": [["x"]], "weights": [1]})");
  CHECK(file_ref.status == 422);
  CHECK(Json::parse(file_ref.body)["error"]["kind"] == "configuration");
}

TEST_CASE("concurrent posts to one session are serialized") {
  Service svc;
  const auto id = create(svc);
  std::atomic<int> ok{0};
  std::atomic<int> conflicts{0};
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&] {
      const auto r = svc.handle("POST", "/sessions/" + id + "/events", fig_events()[0].dump());
      if (r.status == 200) ++ok;
      if (r.status == 409 && Json::parse(r.body)["error"]["phase"] == "CoreSupport") ++conflicts;
    });
  }
  for (auto& t : threads) t.join();
  CHECK(ok == 1);
  CHECK(conflicts == 7);
  const auto view = Json::parse(svc.handle("GET", "/sessions/" + id, "").body);
  CHECK(view["audit_log"].size() == 1);
}

TEST_CASE("sessions are independent") {
  Service svc;
  std::vector<std::string> ids;
  for (int i = 0; i < 4; ++i) ids.push_back(create(svc));
  std::vector<std::thread> threads;
  for (const auto& id : ids) {
    threads.emplace_back([&svc, id] {
      for (const auto& e : fig_events()) svc.handle("POST", "/sessions/" + id + "/events", e.dump());
    });
  }
  for (auto& t : threads) t.join();
  std::set<std::string> distinct(ids.begin(), ids.end());
  CHECK(distinct.size() == 4);
  const auto first = svc.handle("GET", "/sessions/" + ids[0] + "/export", "").body;
  for (const auto& id : ids) CHECK(svc.handle("GET", "/sessions/" + id + "/export", "").body == first);
}

TEST_CASE("the routes answer over HTTP") {
  Service svc;
  httplib::Server server;
  svc.install(server);
  const int port = server.bind_to_any_port("127.0.0.1");
  REQUIRE(port > 0);
  std::thread runner([&] { server.listen_after_bind(); });
  server.wait_until_ready();

  httplib::Client client("127.0.0.1", port);
  auto created = client.Post("/sessions", kConfig.dump(), "application/json");
  REQUIRE(created);
  CHECK(created->status == 201);
  const std::string id = Json::parse(created->body)["id"];
  for (const auto& e : fig_events()) {
    auto r = client.Post("/sessions/" + id + "/events", e.dump(), "application/json");
    REQUIRE(r);
    CHECK(r->status == 200);
  }
  auto wrong = client.Post("/sessions/" + id + "/events", R"({"type": "accept"})", "application/json");
  REQUIRE(wrong);
  CHECK(wrong->status == 409);
  auto exported = client.Get("/sessions/" + id + "/export");
  REQUIRE(exported);
  CHECK(exported->body == svc.handle("GET", "/sessions/" + id + "/export", "").body);
  auto missing = client.Get("/nowhere");
  REQUIRE(missing);
  CHECK(missing->status == 404);
  CHECK(Json::parse(missing->body)["error"]["kind"] == "not_found");
  auto computed = client.Post("/compute/add", R"({"a": {"point": 1}, "b": {"point": 2}})", "application/json");
  REQUIRE(computed);
  CHECK(Json::parse(computed->body)["result"]["cuts"][0] == Json({3.0, 3.0}));

  server.stop();
  runner.join();
}
