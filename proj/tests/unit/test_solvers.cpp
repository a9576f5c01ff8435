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

#include <cmath>
#include <functional>

#include "../support/generators.hpp"
#include "../support/lp_oracle.hpp"
#include "docit2/error.hpp"
#include "docit2/solvers/solvers.hpp"

using namespace docit2;
using namespace docit2::solvers;

namespace {

LPProblem ones(std::size_t n) { return LPProblem{std::vector<Rational>(n, Rational(1)), {}, {}}; }

IntAllocSolution exhaustive(const std::vector<Rational>& targets, std::int64_t total) {
  IntAllocSolution best{{}, Rational(-1)};
  std::vector<std::int64_t> current;
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t i, std::int64_t left) {
    if (i + 1 == targets.size()) {
      current.push_back(left);
      Rational obj = 0;
      for (std::size_t k = 0; k < targets.size(); ++k) obj += abs(Rational(current[k] - targets[k]));
      // Enumeration runs in lexicographic order, so only strict gains count.
      if (best.objective < 0 || obj < best.objective) best = {current, obj};
      current.pop_back();
      return;
    }
    const auto rest = static_cast<std::int64_t>(targets.size() - i - 1);
    for (std::int64_t s = 1; s <= left - rest; ++s) {
      current.push_back(s);
      rec(i + 1, left - s);
      current.pop_back();
    }
  };
  rec(0, total);
  return best;
}

}  // namespace

TEST_CASE("consistent single-ratio system") {
  auto p = ones(2);
  p.terms.push_back({1, 0, Rational(7, 2)});
  const auto s = solve_abs_lp(p);
  CHECK(s.objective == 0);
  CHECK(s.x == std::vector<Rational>{1, Rational(7, 2)});
}

TEST_CASE("two conflicting ratios on one pair") {
  // min |u - 2v| + |u - 3v| with u = x0, v = x1.
  auto p = ones(2);
  p.terms.push_back({0, 1, Rational(2)});
  p.terms.push_back({0, 1, Rational(3)});
  const auto s = solve_abs_lp(p);
  CHECK(s.objective == 1);
  CHECK(s.x == std::vector<Rational>{2, 1});
}

TEST_CASE("explicit constraints") {
  auto p = ones(2);
  p.terms.push_back({0, 1, Rational(1)});
  p.constraints.push_back({{Rational(1), Rational(1)}, Sense::kEqual, Rational(5)});
  const auto s = solve_abs_lp(p);
  CHECK(s.objective == 0);
  CHECK(s.x == std::vector<Rational>{Rational(5, 2), Rational(5, 2)});

  auto q = ones(2);
  q.terms.push_back({1, 0, Rational(3)});
  q.constraints.push_back({{Rational(1), Rational(0)}, Sense::kGreaterEqual, Rational(2)});
  q.constraints.push_back({{Rational(0), Rational(1)}, Sense::kLessEqual, Rational(4)});
  const auto t = solve_abs_lp(q);
  // x0 >= 2 forces x1 = 6 for a perfect fit, but x1 <= 4.
  CHECK(t.objective == 2);
  CHECK(t.x == std::vector<Rational>{2, 4});

  auto bad = ones(1);
  bad.constraints.push_back({{Rational(1)}, Sense::kLessEqual, Rational(0)});
  CHECK_THROWS_AS(solve_abs_lp(bad), Error);
  auto malformed = ones(1);
  malformed.terms.push_back({0, 3, Rational(1)});
  CHECK_THROWS_AS(solve_abs_lp(malformed), Error);
}

TEST_CASE("objective is zero exactly for consistent tables (property)") {
  testing::Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = testing::uniform_int(rng, 2, 5);
    std::vector<Rational> values;
    for (int i = 0; i < n; ++i) values.push_back(Rational(testing::uniform_int(rng, 1, 20)));
    auto p = ones(static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
      for (int r = 0; r < s; ++r) p.terms.push_back({std::size_t(s), std::size_t(r), Rational(values[s] / values[r])});
    }
    CHECK(solve_abs_lp(p).objective == 0);
    // Breaking one ratio away from the consistent value makes it positive.
    if (n >= 3) {
      p.terms.front().c *= 2;
      CHECK(solve_abs_lp(p).objective > 0);
    }
  }
}

TEST_CASE("random four-value instances match the grid oracle (property)") {
  testing::Rng rng(47);
  for (int trial = 0; trial < 25; ++trial) {
    auto p = ones(3);
    std::vector<testing::HalfTerm> half;
    for (std::size_t s = 0; s < 3; ++s) {
      for (std::size_t r = 0; r < s; ++r) {
        const int k = testing::uniform_int(rng, 2, 6);
        p.terms.push_back({s, r, make_rational(k, 2)});
        half.push_back({s, r, k});
      }
    }
    const auto lp = solve_abs_lp(p);
    const double grid = testing::HalfGridOracle(3, half, 10).minimum(64);
    CHECK(std::abs(to_double(lp.objective) - grid) <= 1e-6);
    // Same input, same answer.
    CHECK(solve_abs_lp(p).x == lp.x);
  }
}

TEST_CASE("int allocation examples") {
  CHECK(solve_int_alloc({{Rational(2), Rational(5)}, 7}).shares == std::vector<std::int64_t>{2, 5});
  const auto tie = solve_int_alloc({{Rational(3, 2), Rational(3, 2)}, 3});
  CHECK(tie.shares == std::vector<std::int64_t>{1, 2});
  CHECK(tie.objective == 1);
  CHECK(solve_int_alloc({{Rational(1, 3)}, 4}).shares == std::vector<std::int64_t>{4});
  CHECK_THROWS_AS(solve_int_alloc({{Rational(1), Rational(1)}, 1}), Error);
}

TEST_CASE("int allocation equals exhaustive search (property)") {
  testing::Rng rng(53);
  for (int trial = 0; trial < 400; ++trial) {
    const int slots = testing::uniform_int(rng, 1, 6);
    const int total = testing::uniform_int(rng, slots, 30);
    std::vector<Rational> targets;
    for (int i = 0; i < slots; ++i) {
      // Quarter steps make exact ties frequent.
      targets.push_back(make_rational(testing::uniform_int(rng, 1, 40), 4));
    }
    const auto fast = solve_int_alloc({targets, total});
    const auto slow = exhaustive(targets, total);
    std::string label = "total " + std::to_string(total) + " targets";
    for (const auto& t : targets) label += " " + to_string(t);
    INFO(label);
    REQUIRE(fast.objective == slow.objective);
    REQUIRE(fast.shares == slow.shares);
  }
}
