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
#include <set>
#include <tuple>

#include "../support/generators.hpp"
#include "docit2/error.hpp"
#include "docit2/ratio/subjective_ratios.hpp"

using namespace docit2;
using namespace docit2::ratio;

namespace {

SubjectiveRatios from_memberships(const std::vector<std::string>& names, const std::vector<double>& mu,
                                  const std::vector<std::string>& refs) {
  SubjectiveRatios rho{names, refs, {}};
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = 0; j < names.size(); ++j) {
      if (i != j) rho.ratios[{names[i], names[j]}] = mu[i] / mu[j];
    }
  }
  return rho;
}

// Literal quadruple scan, reduced to unordered ({x,y},{z,w}) classes.
std::set<std::tuple<std::string, std::string, std::string, std::string>> brute_force_classes(
    const SubjectiveRatios& rho) {
  std::set<std::tuple<std::string, std::string, std::string, std::string>> out;
  for (const auto& x : rho.universe) {
    for (const auto& y : rho.universe) {
      for (const auto& z : rho.support_members) {
        for (const auto& w : rho.support_members) {
          if (rho.at(x, z) >= rho.at(y, z) && rho.at(x, w) < rho.at(y, w)) {
            out.insert({std::min(x, y), std::max(x, y), std::min(z, w), std::max(z, w)});
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("validation reports missing pairs") {
  SubjectiveRatios rho{{"a", "b", "c"}, {"c"}, {{{"a", "c"}, 2.0}}};
  try {
    rho.validate();
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kIncompleteData);
    CHECK(std::string(e.what()).find("(b|c)") != std::string::npos);
  }
  rho.ratios[{"b", "c"}] = -1.0;
  CHECK_THROWS_AS(rho.validate(), Error);
}

TEST_CASE("ratios induced by memberships are consistent") {
  const auto rho = from_memberships({"p", "q", "r", "s"}, {0.2, 0.4, 0.6, 1.0}, {"p", "q", "r", "s"});
  CHECK(check_reference_independence(rho).empty());
  CHECK(check_multiplicative(rho).empty());
}

TEST_CASE("reference independence counterexample") {
  SubjectiveRatios rho{{"a", "b", "c", "w"}, {"c", "w"}, {}};
  rho.ratios = {{{"a", "c"}, 2.0}, {{"b", "c"}, 1.0}, {{"w", "c"}, 1.0},
                {{"a", "w"}, 0.5}, {{"b", "w"}, 1.0}, {{"c", "w"}, 1.0}};
  const auto v = check_reference_independence(rho);
  CHECK(std::find(v.begin(), v.end(), IndependenceViolation{"a", "b", "c", "w"}) != v.end());
  CHECK(v.size() == brute_force_classes(rho).size());
}

TEST_CASE("perturbed tables: violations equal the exhaustive scan (property)") {
  testing::Rng rng(5);
  const std::vector<std::string> names{"a", "b", "c", "d", "e"};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> mu;
    for (int i = 0; i < 5; ++i) mu.push_back(testing::uniform(rng, 0.1, 1.0));
    auto rho = from_memberships(names, mu, names);
    auto it = rho.ratios.begin();
    std::advance(it, testing::uniform_int(rng, 0, static_cast<int>(rho.ratios.size()) - 1));
    it->second *= 1.5;
    const auto found = check_reference_independence(rho);
    std::set<std::tuple<std::string, std::string, std::string, std::string>> classes;
    for (const auto& q : found) {
      classes.insert({std::min(q.x, q.y), std::max(q.x, q.y), std::min(q.z, q.w), std::max(q.z, q.w)});
    }
    REQUIRE(classes.size() == found.size());
    REQUIRE(classes == brute_force_classes(rho));
  }
}

TEST_CASE("multiplicative property") {
  SubjectiveRatios rho{{"x", "y", "z"}, {"y", "z"}, {}};
  rho.ratios = {{{"x", "y"}, 2.0}, {{"y", "z"}, 3.0}, {{"x", "z"}, 5.0}, {{"z", "y"}, 1.0 / 3.0}};
  const auto v = check_multiplicative(rho);
  REQUIRE_FALSE(v.empty());
  CHECK(v.front().x == "x");
  CHECK(v.front().y == "y");
  CHECK(v.front().z == "z");
  CHECK(v.front().expected == 6.0);

  rho.ratios[{"x", "z"}] = 5.9;
  CHECK(check_multiplicative(rho, 0.05).empty());
  CHECK_FALSE(check_multiplicative(rho, 0.01).empty());
}

TEST_CASE("memberships_from_ratios") {
  SubjectiveRatios rho{{"w", "u", "v"}, {"w"}, {{{"u", "w"}, 2.0}, {{"v", "w"}, 4.0}}};
  const auto mu = memberships_from_ratios(rho, "w");
  CHECK(mu.at("w") == 0.25);
  CHECK(mu.at("u") == 0.5);
  CHECK(mu.at("v") == 1.0);

  SubjectiveRatios single{{"only"}, {"only"}, {}};
  CHECK(memberships_from_ratios(single, "only").at("only") == 1.0);

  CHECK_THROWS_AS(memberships_from_ratios(rho, "u"), Error);

  SubjectiveRatios bad{{"x", "y", "z"}, {"y", "z"}, {}};
  bad.ratios = {{{"x", "y"}, 2.0}, {{"y", "z"}, 3.0}, {{"x", "z"}, 5.0}, {{"z", "y"}, 1.0 / 3.0}};
  try {
    memberships_from_ratios(bad, "z");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInconsistent);
  }
}

TEST_CASE("hidden memberships are recovered for every reference") {
  const std::vector<std::string> names{"p", "q", "r", "s"};
  const std::vector<double> hidden{0.2, 0.4, 0.6, 1.0};
  const auto rho = from_memberships(names, hidden, names);
  for (const auto& w : names) {
    const auto mu = memberships_from_ratios(rho, w);
    for (std::size_t i = 0; i < names.size(); ++i) CHECK(mu.at(names[i]) == doctest::Approx(hidden[i]).epsilon(1e-12));
    for (const auto& x : names) {
      for (const auto& y : names) CHECK(mu.at(x) / mu.at(y) == doctest::Approx(rho.at(x, y)).epsilon(1e-12));
    }
  }
}
