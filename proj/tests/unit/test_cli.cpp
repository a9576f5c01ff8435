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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(DOCIT2_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (const auto n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path scratch(const std::string& name, const std::string& content) {
  const auto dir = fs::temp_directory_path() / "docit2_cli_test";
  fs::create_directories(dir);
  const auto p = dir / name;
  std::ofstream(p, std::ios::binary) << content;
  return p;
}

const std::string kGolden = DOCIT2_GOLDEN_DIR;

}  // namespace

TEST_CASE("cards converts decimals and fits card totals") {
  auto r = run("cards --values 0,0.33,1 --m 2");
  CHECK(r.code == 0);
  CHECK(r.out == "33,67\n");
  r = run("cards --values 0,2,7 --h-max 7");
  CHECK(r.out == "gaps 1,4\ntotal 7\nobjective 0\n");
  r = run("cards --values 0,0.331,0.332,1 --m 2");
  CHECK(r.code == 2);
  CHECK(Json::parse(r.out)["error"]["kind"] == "needs_larger_m");
}

TEST_CASE("replay reports the memberships of the card example") {
  const auto out = fs::temp_directory_path() / "docit2_cli_fig.docit2.json";
  const auto r = run("replay --input " + kGolden + "/01_fig_accept.events.jsonl --output " + out.string());
  REQUIRE(r.code == 0);
  const auto report = Json::parse(r.out);
  CHECK(report["labels"]["mid"]["left"]["memberships"][0] == Json({"0", "2/7", "1"}));
  CHECK(report["labels"]["mid"]["left"]["decimal"][0][1].get<double>() == doctest::Approx(0.2857142857));
}

TEST_CASE("replay overrides rebuild the session") {
  const auto r = run("replay --input " + kGolden + "/03_hesitation_left.events.jsonl --enumeration-cap 2");
  CHECK(r.code == 2);
  CHECK(Json::parse(r.out)["error"]["kind"] == "too_many_chains");
  CHECK(Json::parse(r.out)["error"]["path"] == "/events/2");
}

TEST_CASE("compute evaluates expression files") {
  const auto f = scratch("order.json", R"([{"op": "order", "a": {"triangular": [0, 1, 2]}, "b": {"triangular": [3, 4, 5]}},
                                           {"op": "add", "a": {"point": 1}, "b": {"point": 2}}])");
  const auto r = run("compute --input " + f.string());
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j[0]["result"] == "less");
  CHECK(j[1]["result"]["cuts"][0] == Json({3.0, 3.0}));
  const auto it2 = scratch("it2.json", R"({"op": "order",
      "a": {"lower": {"triangular": [0.45, 0.5, 0.55]}, "upper": {"triangular": [0.2, 0.5, 0.9]}},
      "b": {"lower": {"triangular": [0.5, 0.55, 0.6]}, "upper": {"triangular": [0.3, 0.55, 0.65]}}})");
  CHECK(Json::parse(run("compute --order 2 --input " + it2.string()).out)["result"] == "greater");
  CHECK(Json::parse(run("compute --order 1 --input " + it2.string()).out)["result"] == "less");
}

TEST_CASE("rank writes the report, table and knot dumps") {
  fs::copy_file(kGolden + "/01_fig_accept.docit2.json", fs::temp_directory_path() / "docit2_cli_test" / "fig.docit2.json",
                fs::copy_options::overwrite_existing);
  const auto f = scratch("problem.json", R"({
    "alternatives": ["x", "y"],
    "scales": {"e": {"session": "fig.docit2.json"}},
    "criteria": [{"name": "g1", "scale": "e"}, {"name": "g2", "range": [0, 1]}],
    "matrix": [["mid", 0.2], ["mid", 0.1]],
    "weights": [0.5, 0.5]})");
  const auto dir = f.parent_path();
  const auto r = run("rank --input " + f.string() + " --output " + (dir / "report.json").string() + " --csv " +
                     (dir / "ranking.csv").string() + " --knots-dir " + (dir / "knots").string());
  REQUIRE(r.code == 0);
  std::ifstream csv(dir / "ranking.csv");
  std::string text((std::istreambuf_iterator<char>(csv)), {});
  CHECK(text == "order,rank,alternative\norder_1,1,x\norder_1,2,y\norder_2,1,x\norder_2,2,y\n");
  CHECK(fs::exists(dir / "knots" / "x.csv"));
}

TEST_CASE("plot-data emits knot tables") {
  const auto f = scratch("tri.json", R"({"triangular": [0, 0.5, 1]})");
  auto r = run("plot-data --input " + f.string());
  CHECK(r.out == "x,membership\n0,0\n0.5,1\n1,0\n");
  r = run("plot-data --input " + kGolden + "/03_hesitation_left.docit2.json --label mid");
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("series,x,membership\nlower,0.1,0\n"));
  r = run("plot-data --input " + kGolden + "/03_hesitation_left.docit2.json --label high");
  CHECK(r.code == 2);
}

TEST_CASE("exit codes") {
  const auto bad = scratch("bad.events.jsonl",
                           "{\"schema\":\"docit2.events\",\"schema_version\":1,\"config\":{\"labels\":[\"a\",\"b\"]}}\n"
                           "{\"type\":\"accept\"}\n");
  auto r = run("replay --input " + bad.string());
  CHECK(r.code == 3);
  CHECK(Json::parse(r.out)["error"]["path"] == "/events/0");
  r = run("replay --input /nonexistent/file");
  CHECK(r.code == 2);
  r = run("frobnicate");
  CHECK(r.code == 2);
  const auto migrated = scratch("v9.docit2.json", R"({"schema": "docit2.session", "schema_version": 9})");
  r = run("replay --input " + migrated.string());
  CHECK(r.code == 2);
  CHECK(Json::parse(r.out)["error"]["kind"] == "migration");
}
