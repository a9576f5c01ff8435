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

#include "docit2/ratio/subjective_ratios.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "docit2/error.hpp"

namespace docit2::ratio {

double SubjectiveRatios::at(const std::string& x, const std::string& y) const {
  if (x == y) return 1.0;
  const auto it = ratios.find({x, y});
  if (it == ratios.end()) {
    throw Error(ErrorKind::kIncompleteData, "missing ratio rho(" + x + "|" + y + ")");
  }
  return it->second;
}

void SubjectiveRatios::validate() const {
  const std::set<std::string> known(universe.begin(), universe.end());
  if (known.size() != universe.size()) throw Error(ErrorKind::kDomain, "duplicate element in universe");
  for (const auto& s : support_members) {
    if (!known.contains(s)) throw Error(ErrorKind::kDomain, "reference " + s + " is not in the universe");
  }
  for (const auto& [key, value] : ratios) {
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw Error(ErrorKind::kDomain, "ratio rho(" + key.first + "|" + key.second + ") must be positive");
    }
  }
  std::vector<std::string> missing;
  for (const auto& y : support_members) {
    for (const auto& x : universe) {
      if (x != y && !ratios.contains({x, y})) missing.push_back("(" + x + "|" + y + ")");
    }
  }
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
    throw Error(ErrorKind::kIncompleteData, "missing ratios: " + list);
  }
}

std::vector<IndependenceViolation> check_reference_independence(const SubjectiveRatios& rho) {
  rho.validate();
  const auto& u = rho.universe;
  const auto& refs = rho.support_members;
  std::vector<IndependenceViolation> out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = i + 1; j < u.size(); ++j) {
      for (std::size_t k = 0; k < refs.size(); ++k) {
        for (std::size_t l = k + 1; l < refs.size(); ++l) {
          // Scan the four orientations of ({x,y}, {z,w}) in a fixed order.
          const std::pair<std::size_t, std::size_t> items[] = {{i, j}, {j, i}};
          const std::pair<std::size_t, std::size_t> pairs[] = {{k, l}, {l, k}};
          bool found = false;
          for (const auto& [xi, yi] : items) {
            for (const auto& [zi, wi] : pairs) {
              const auto &x = u[xi], &y = u[yi], &z = refs[zi], &w = refs[wi];
              if (!found && rho.at(x, z) >= rho.at(y, z) && rho.at(x, w) < rho.at(y, w)) {
                out.push_back({x, y, z, w});
                found = true;
              }
            }
          }
        }
      }
    }
  }
  return out;
}

std::vector<MultiplicativeViolation> check_multiplicative(const SubjectiveRatios& rho, double tol) {
  if (!(tol >= 0.0)) throw Error(ErrorKind::kDomain, "tolerance must be non-negative");
  rho.validate();
  std::vector<MultiplicativeViolation> out;
  for (const auto& x : rho.universe) {
    for (const auto& y : rho.support_members) {
      for (const auto& z : rho.support_members) {
        if (x == y || y == z || x == z) continue;
        const double expected = rho.at(x, y) * rho.at(y, z);
        const double actual = rho.at(x, z);
        if (std::abs(actual - expected) > tol * actual) out.push_back({x, y, z, expected, actual});
      }
    }
  }
  return out;
}

std::map<std::string, double> memberships_from_ratios(const SubjectiveRatios& rho, const std::string& w,
                                                      double tol) {
  if (std::find(rho.support_members.begin(), rho.support_members.end(), w) == rho.support_members.end()) {
    throw Error(ErrorKind::kDomain, "reference " + w + " is not a support member");
  }
  const auto independence = check_reference_independence(rho);
  const auto multiplicative = check_multiplicative(rho, tol);
  if (!independence.empty() || !multiplicative.empty()) {
    std::ostringstream msg;
    msg << "inconsistent ratios:";
    for (const auto& v : independence) {
      msg << " reference-independence(" << v.x << "," << v.y << "," << v.z << "," << v.w << ")";
    }
    for (const auto& v : multiplicative) {
      msg << " multiplicative(" << v.x << "," << v.y << "," << v.z << ": " << v.actual << " vs "
          << v.expected << ")";
    }
    throw Error(ErrorKind::kInconsistent, msg.str());
  }
  double top = 0.0;
  for (const auto& x : rho.universe) top = std::max(top, rho.at(x, w));
  std::map<std::string, double> mu;
  for (const auto& x : rho.universe) mu[x] = rho.at(x, w) / top;
  return mu;
}

}  // namespace docit2::ratio
