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

#include <algorithm>
#include <numeric>

#include "docit2/error.hpp"
#include "docit2/io/codec.hpp"
#include "docit2/io/compute.hpp"
#include "docit2/io/document.hpp"
#include "docit2/mcdm/mcdm.hpp"
#include "docit2/mcdm/problem_io.hpp"
#include "../support/generators.hpp"

using namespace docit2;
using namespace docit2::mcdm;
using fuzzy::Interval;
using fuzzy::PiecewiseMF;
using it2::IT2MF;
using it2::IT2OrderKind;
using it2::Ordering;
using json::Json;

namespace {

IT2MF crafted_a() { return IT2MF(PiecewiseMF::triangular(0.45, 0.5, 0.55), PiecewiseMF::triangular(0.2, 0.5, 0.9)); }
IT2MF crafted_b() { return IT2MF(PiecewiseMF::triangular(0.5, 0.55, 0.6), PiecewiseMF::triangular(0.3, 0.55, 0.65)); }

LinguisticScale three_point_scale() {
  LinguisticScale s;
  s.name = "q";
  s.labels = {"low", "mid", "high"};
  s.bindings.emplace("low", IT2MF::from_t1(PiecewiseMF::trapezoidal(0, 0.125, 0.25, 0.5)));
  s.bindings.emplace("mid", IT2MF(PiecewiseMF::triangular(0.375, 0.5, 0.625), PiecewiseMF::triangular(0.25, 0.5, 0.75)));
  s.bindings.emplace("high", IT2MF::from_t1(PiecewiseMF::trapezoidal(0.5, 0.75, 0.875, 1)));
  return s;
}

DecisionProblem labelled(std::vector<std::vector<std::string>> rows, std::vector<double> weights) {
  DecisionProblem p;
  p.scales.push_back(three_point_scale());
  for (std::size_t j = 0; j < weights.size(); ++j) p.criteria.push_back({"c" + std::to_string(j + 1), 0, {}});
  for (std::size_t i = 0; i < rows.size(); ++i) {
    p.alternatives.push_back("a" + std::to_string(i + 1));
    p.matrix.emplace_back(rows[i].begin(), rows[i].end());
  }
  p.weights = std::move(weights);
  return p;
}

bool cuts_close(const PiecewiseMF& a, const PiecewiseMF& b, double tol) {
  const auto levels = fuzzy::AlphaLevels::merge(a.levels(), b.levels());
  for (double alpha : levels.values()) {
    const auto x = a.alpha_cut(alpha);
    const auto y = b.alpha_cut(alpha);
    if (std::abs(x.lo - y.lo) > tol || std::abs(x.hi - y.hi) > tol) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("a single criterion passes its label through") {
  const auto p = labelled({{"mid"}}, {1.0});
  CHECK(it2::same_function(score_alternative(p, 0), three_point_scale().bound("mid")));
}

TEST_CASE("averaging one label with itself returns it") {
  const auto exact = labelled({{"mid", "mid", "mid"}}, {0.25, 0.25, 0.5});
  CHECK(it2::same_function(score_alternative(exact, 0), three_point_scale().bound("mid")));
  const auto inexact = labelled({{"mid", "mid"}}, {0.3, 0.7});
  const auto s = score_alternative(inexact, 0);
  const auto mid = three_point_scale().bound("mid");
  CHECK(cuts_close(s.lower(), mid.lower(), 1e-12));
  CHECK(cuts_close(s.upper(), mid.upper(), 1e-12));
}

TEST_CASE("two trapezoids average level by level") {
  DecisionProblem p;
  p.alternatives = {"a"};
  p.criteria = {{"x", {}, Interval{0, 1}}, {"y", {}, Interval{0, 1}}};
  p.matrix = {{IT2MF::from_t1(PiecewiseMF::trapezoidal(0, 0.1, 0.2, 0.4)),
               IT2MF::from_t1(PiecewiseMF::trapezoidal(0.2, 0.4, 0.6, 0.8))}};
  p.weights = {0.5, 0.5};
  const auto s = score_alternative(p, 0);
  CHECK(s.lower().support().lo == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(s.lower().support().hi == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(s.lower().core().lo == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(s.lower().core().hi == doctest::Approx(0.4).epsilon(1e-15));
}

TEST_CASE("numbers are normalised on the criterion range") {
  DecisionProblem p;
  p.alternatives = {"a"};
  p.criteria = {{"cost", {}, Interval{100, 300}}};
  p.matrix = {{150.0}};
  p.weights = {1.0};
  CHECK(score_alternative(p, 0).upper().core() == Interval{0.25, 0.25});
  p.matrix = {{400.0}};
  CHECK_THROWS_AS(score_alternative(p, 0), Error);
}

TEST_CASE("an unbound label is a configuration error that names it") {
  auto p = labelled({{"mid", "high"}}, {0.5, 0.5});
  p.scales[0].bindings.erase("high");
  try {
    rank(p, IT2OrderKind::kLowerFirst);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kConfiguration);
    CHECK(std::string(e.what()).find("'high'") != std::string::npos);
    CHECK(e.path() == "/matrix/0/1");
  }
}

TEST_CASE("problem validation") {
  auto p = labelled({{"mid", "high"}}, {0.5, 0.4});
  CHECK_THROWS_AS(p.validate(), Error);
  p.weights = {0.5, 0.5};
  p.matrix[0].pop_back();
  try {
    p.validate();
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kIncompleteData);
  }
}

TEST_CASE("rankings") {
  const auto one = rank(labelled({{"low"}}, {1.0}), IT2OrderKind::kUpperFirst);
  CHECK(one.classes == std::vector<std::vector<std::string>>{{"a1"}});

  const auto p = labelled({{"low", "mid"}, {"high", "high"}, {"low", "mid"}, {"mid", "mid"}}, {0.5, 0.5});
  for (auto k : {IT2OrderKind::kLowerFirst, IT2OrderKind::kUpperFirst}) {
    const auto r = rank(p, k);
    CHECK(r.classes == std::vector<std::vector<std::string>>{{"a2"}, {"a4"}, {"a1", "a3"}});
  }

  DecisionProblem crafted;
  crafted.alternatives = {"a", "b"};
  crafted.criteria = {{"x", {}, Interval{0, 1}}};
  crafted.matrix = {{crafted_a()}, {crafted_b()}};
  crafted.weights = {1.0};
  const auto r1 = rank(crafted, IT2OrderKind::kLowerFirst);
  const auto r2 = rank(crafted, IT2OrderKind::kUpperFirst);
  CHECK(r1.classes == std::vector<std::vector<std::string>>{{"b"}, {"a"}});
  CHECK(r2.classes == std::vector<std::vector<std::string>>{{"a"}, {"b"}});
  const auto report = rank_report(crafted);
  CHECK(report["rankings"][0]["order"] == "order_1");
  CHECK(report["rankings"][1]["ranking"][0]["alternatives"] == Json({"a"}));
  const std::vector<Ranking> both{r1, r2};
  CHECK(ranking_csv(both) == "order,rank,alternative\norder_1,1,b\norder_1,2,a\norder_2,1,a\norder_2,2,b\n");
}

TEST_CASE("a row that is never worse ranks at least as high") {
  testing::Rng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = testing::uniform_int(rng, 2, 5);
    std::vector<double> a(k), b(k), c(k);
    for (int i = 0; i < k; ++i) {
      a[i] = testing::uniform(rng, 0.0, 0.3);
      b[i] = testing::uniform(rng, 0.35, 0.65);
      c[i] = testing::uniform(rng, 0.7, 1.0);
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::sort(c.begin(), c.end());
    const bool degenerate = trial % 2 == 0;
    LinguisticScale s;
    s.name = "s";
    for (int i = 0; i < k; ++i) {
      const auto label = "l" + std::to_string(i);
      s.labels.push_back(label);
      const auto upper = PiecewiseMF::triangular(a[i], b[i], c[i]);
      const auto lower = PiecewiseMF::triangular(a[i] + 0.02, b[i], c[i] - 0.02);
      s.bindings.emplace(label, degenerate ? IT2MF::from_t1(upper) : IT2MF(lower, upper));
    }
    const std::size_t n = static_cast<std::size_t>(testing::uniform_int(rng, 1, 5));
    DecisionProblem p;
    p.scales.push_back(s);
    p.alternatives = {"better", "worse"};
    p.matrix.resize(2);
    for (std::size_t j = 0; j < n; ++j) {
      p.criteria.push_back({"c" + std::to_string(j), 0, {}});
      const int lw = testing::uniform_int(rng, 0, k - 1);
      const int lb = testing::uniform_int(rng, lw, k - 1);
      p.matrix[0].emplace_back(s.labels[lb]);
      p.matrix[1].emplace_back(s.labels[lw]);
    }
    p.weights = testing::random_simplex(rng, n);
    const auto x = score_alternative(p, 0);
    const auto y = score_alternative(p, 1);
    CHECK(it2::it2_order_1(x, y) != Ordering::kLess);
    CHECK(it2::it2_order_2(x, y) != Ordering::kLess);
    for (auto kind : {IT2OrderKind::kLowerFirst, IT2OrderKind::kUpperFirst}) {
      CHECK(rank(p, kind).classes.front().front() == "better");
    }
  }
}

TEST_CASE("permuting criteria together with weights keeps scores") {
  testing::Rng rng(77);
  const auto scale = three_point_scale();
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = static_cast<std::size_t>(testing::uniform_int(rng, 2, 5));
    // Dyadic weights keep every sum exact whatever the order.
    std::vector<int> units(n, 1);
    for (int extra = 0; extra < 16 - static_cast<int>(n); ++extra) ++units[testing::uniform_int(rng, 0, static_cast<int>(n) - 1)];
    DecisionProblem p;
    p.scales.push_back(scale);
    p.alternatives = {"a"};
    p.matrix.resize(1);
    for (std::size_t j = 0; j < n; ++j) {
      p.criteria.push_back({"c" + std::to_string(j), 0, {}});
      p.matrix[0].emplace_back(scale.labels[testing::uniform_int(rng, 0, 2)]);
      p.weights.push_back(units[j] / 16.0);
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    DecisionProblem q = p;
    for (std::size_t j = 0; j < n; ++j) {
      q.criteria[j] = p.criteria[perm[j]];
      q.matrix[0][j] = p.matrix[0][perm[j]];
      q.weights[j] = p.weights[perm[j]];
    }
    CHECK(it2::same_function(score_alternative(p, 0), score_alternative(q, 0)));
  }
}

TEST_CASE("problem files") {
  const Json problem = Json::parse(R"({
    "alternatives": ["x", "y"],
    "scales": {"q": {"labels": ["low", "mid", "high"],
                     "bindings": {"low": {"triangular": [0, 0, 0.5]},
                                  "mid": {"triangular": [0.25, 0.5, 0.75]},
                                  "high": {"triangular": [0.5, 1, 1]}}}},
    "criteria": [{"name": "g1", "scale": "q"}, {"name": "g2", "scale": "q"},
                 {"name": "g3", "range": [0, 10]}, {"name": "g4", "scale": "q"}],
    "matrix": [["high", "mid", 5, "low"], ["low", "mid", 10, {"point": 0.5}]],
    "weights": {"cards": {"items": ["g4", "g3", "g2", "g1"], "gaps": [0, 2, 1]}}
  })");
  const auto p = problem_from_json(problem);
  CHECK(p.weights[0] == to_double(Rational(6) / 11));
  CHECK(p.weights[1] == to_double(Rational(4) / 11));
  CHECK(p.weights[2] == to_double(Rational(1) / 11));
  CHECK(p.weights[3] == 0.0);
  const auto report = io::compute("rank", problem);
  CHECK(report["rankings"].size() == 2);
  CHECK(report["rankings"][0]["ranking"][0]["alternatives"] == Json({"x"}));

  Json bad = problem;
  bad["matrix"][1][0] = "huge";
  try {
    io::compute("rank", bad);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kConfiguration);
    CHECK(e.path() == "/matrix/1/0");
  }
  bad = problem;
  bad["weights"]["cards"]["items"][0] = "g9";
  CHECK_THROWS_AS(problem_from_json(bad), Error);
}

TEST_CASE("a scale can come from an elicited session") {
  elicitation::SessionConfig config;
  config.labels = {"low", "mid", "high"};
  elicitation::Session s(config);
  s.apply(Json{{"type", "label_gaps"}, {"gaps", {1, 4}}, {"label", "mid"}});
  s.apply(Json{{"type", "set_core_support"}, {"support", {0.1, 0.6}}, {"core", {0.25, 0.3}}});
  s.apply(Json{{"type", "place_cards"}, {"gaps", {1, 4}}});
  s.apply(Json{{"type", "accept"}});
  s.apply(Json{{"type", "continue"}});
  s.apply(Json{{"type", "place_cards"}, {"gaps", {{0, 2}}}});
  s.apply(Json{{"type", "continue"}});
  const auto text = io::save_document(s);

  Json problem{{"alternatives", {"x"}},
               {"scales", {{"e", {{"session", "mid.docit2.json"}}}}},
               {"criteria", {{{"name", "g"}, {"scale", "e"}}}},
               {"matrix", {{"mid"}}},
               {"weights", {1}}};
  const FileReader reader = [&](const std::string& path) {
    CHECK(path == "mid.docit2.json");
    return text;
  };
  const auto p = problem_from_json(problem, reader);
  CHECK(it2::same_function(score_alternative(p, 0), *s.state().labels.at("mid").it2));
  CHECK_THROWS_AS(problem_from_json(problem), Error);
  problem["scales"]["e"] = {{"document", io::parse_json(text)}};
  CHECK_NOTHROW(problem_from_json(problem));
  problem["matrix"][0][0] = "low";
  try {
    rank(problem_from_json(problem), IT2OrderKind::kLowerFirst);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kConfiguration);
  }
}

TEST_CASE("stateless computations") {
  const Json a{{"triangular", {0, 1, 2}}};
  const Json b{{"triangular", {3, 4, 5}}};
  CHECK(io::compute("order", {{"a", a}, {"b", b}})["result"] == "less");
  CHECK(io::compute("order", {{"a", b}, {"b", a}, {"order", 2}})["result"] == "greater");
  const auto sum = io::mf_from_json(io::compute("add", {{"a", a}, {"b", b}})["result"], "");
  CHECK(fuzzy::same_function(sum, PiecewiseMF::triangular(3, 5, 7)));
  const auto both = io::compute("order", {{"a", io::to_json(crafted_a())}, {"b", io::to_json(crafted_b())}});
  CHECK(both["order_1"] == "less");
  CHECK(both["order_2"] == "greater");
  const auto half = io::compute("scale", {{"r", 0.25}, {"a", {{"levels", {0, 1}}, {"cuts", {{0, 8}, {4, 4}}}}}});
  CHECK(half["result"]["cuts"] == Json({{0, 2}, {1, 1}}));
  const auto wa = io::compute("wa", {{"items", {{{"point", 0}}, {{"point", 1}}}}, {"weights", {"1/2", "1/2"}}});
  CHECK(wa["result"]["cuts"][1] == Json({0.5, 0.5}));
  try {
    io::compute("scale", {{"r", -1}, {"a", a}});
  } catch (const Error& e) {
    CHECK(e.path() == "/r");
  }
  CHECK_THROWS_AS(io::compute("divide", Json::object()), Error);
  const auto many = io::compute_file(Json::array({{{"op", "order"}, {"a", a}, {"b", b}}, {{"op", "add"}, {"a", a}, {"b", b}}}));
  CHECK(many.size() == 2);
  try {
    io::compute_file(Json::array({{{"op", "order"}, {"a", a}, {"b", b}}, {{"op", "add"}, {"a", a}}}));
  } catch (const Error& e) {
    CHECK(e.path() == "/1/b");
  }
}
