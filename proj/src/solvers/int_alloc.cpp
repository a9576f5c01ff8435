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

#include <algorithm>
#include <map>
#include <optional>
#include <string>

#include "docit2/error.hpp"
#include "docit2/solvers/solvers.hpp"

namespace docit2::solvers {

// The cost |s - t| is convex in the integer share s. Raising a share from s
// to s + 1 changes it by -1 while s + 1 <= t, by 2 floor(t) + 1 - 2t once
// (when t is fractional), and by +1 afterwards. An allocation is optimal iff
// it takes the (total - slots) smallest such increments; ties at the cutoff
// go to the last slots, which yields the lexicographically smallest optimum.
IntAllocSolution solve_int_alloc(const IntAllocProblem& problem) {
  IntAllocProblem p = problem;
  for (auto& t : p.targets) t.canonicalize();
  const auto slots = static_cast<std::int64_t>(p.targets.size());
  if (slots == 0) throw Error(ErrorKind::kDomain, "no slots to allocate");
  if (p.total < slots) {
    throw Error(ErrorKind::kDomain, "total " + std::to_string(p.total) + " is below the slot count " +
                                        std::to_string(slots));
  }

  struct Increments {
    std::int64_t negative = 0;        // count of -1 steps
    std::optional<Rational> middle;   // the fractional step, if any
  };
  std::vector<Increments> inc(p.targets.size());
  // Cutoff candidates with the number of increments at each value; +1 is
  // unlimited and handled separately.
  std::map<Rational, std::int64_t> finite;
  for (std::size_t i = 0; i < p.targets.size(); ++i) {
    const Rational& t = p.targets[i];
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
    if (fl >= 1) inc[i].negative = fl.get_si() - 1;
    if (t > 1 && Rational(fl) != t) inc[i].middle = Rational(2 * fl + 1) - 2 * t;
    if (inc[i].negative > 0) finite[Rational(-1)] += inc[i].negative;
    if (inc[i].middle) finite[*inc[i].middle] += 1;
  }

  std::int64_t remaining = p.total - slots;
  Rational cutoff(1);
  for (const auto& [value, count] : finite) {
    if (remaining <= count) {
      cutoff = value;
      break;
    }
    remaining -= count;
  }

  // Take every increment strictly below the cutoff.
  std::vector<std::int64_t> shares(p.targets.size(), 1);
  std::int64_t taken = 0;
  for (std::size_t i = 0; i < inc.size(); ++i) {
    if (Rational(-1) < cutoff) shares[i] += inc[i].negative;
    if (inc[i].middle && *inc[i].middle < cutoff) shares[i] += 1;
    taken += shares[i] - 1;
  }
  remaining = p.total - slots - taken;
  // Fill the rest with cutoff-valued increments, last slot first.
  for (std::size_t k = inc.size(); k-- > 0 && remaining > 0;) {
    std::int64_t available = 0;
    if (cutoff == 1) {
      available = remaining;
    } else if (cutoff == -1) {
      available = inc[k].negative;
    } else if (inc[k].middle && *inc[k].middle == cutoff) {
      available = 1;
    }
    const std::int64_t use = std::min(available, remaining);
    shares[k] += use;
    remaining -= use;
  }
  if (remaining != 0) throw Error(ErrorKind::kInternal, "allocation did not reach the total");

  IntAllocSolution out{shares, Rational(0)};
  for (std::size_t i = 0; i < shares.size(); ++i) out.objective += abs(Rational(shares[i] - p.targets[i]));
  return out;
}

}  // namespace docit2::solvers
