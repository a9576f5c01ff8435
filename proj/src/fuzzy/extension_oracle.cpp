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

#include "docit2/fuzzy/extension_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "docit2/error.hpp"

namespace docit2::fuzzy {

namespace {

std::vector<double> raster(const Interval& range, double step) {
  std::vector<double> xs;
  const double first = std::ceil(range.lo / step);
  const double last = std::floor(range.hi / step);
  for (double k = first; k <= last; k += 1.0) xs.push_back(k * step);
  xs.push_back(range.lo);
  xs.push_back(range.hi);
  return xs;
}

void sort_unique(std::vector<double>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

}  // namespace

std::vector<SampledMembership> extension_oracle(const PiecewiseMF& a, const PiecewiseMF& b,
                                                ExtensionOp op, double grid_step) {
  if (!(grid_step > 0.0)) throw Error(ErrorKind::kDomain, "grid_step must be positive");
  const auto knots_a = a.knots();
  const auto knots_b = b.knots();
  const Interval sa = a.support();
  const Interval sb = b.support();

  Interval hull;
  std::vector<double> zs;
  if (op == ExtensionOp::kSum) {
    hull = {sa.lo + sb.lo, sa.hi + sb.hi};
    for (double ka : knots_a) {
      for (double kb : knots_b) zs.push_back(ka + kb);
    }
  } else {
    const double p[] = {sa.lo * sb.lo, sa.lo * sb.hi, sa.hi * sb.lo, sa.hi * sb.hi};
    hull = {*std::min_element(std::begin(p), std::end(p)),
            *std::max_element(std::begin(p), std::end(p))};
    for (double ka : knots_a) {
      for (double kb : knots_b) zs.push_back(ka * kb);
    }
  }
  for (double z : raster(hull, grid_step)) zs.push_back(z);
  sort_unique(zs);

  // The decomposition variable: x in A for sums, y in B for products.
  std::vector<double> base = op == ExtensionOp::kSum ? raster(sa, grid_step) : raster(sb, grid_step);
  const auto& own_knots = op == ExtensionOp::kSum ? knots_a : knots_b;
  base.insert(base.end(), own_knots.begin(), own_knots.end());
  sort_unique(base);

  std::vector<SampledMembership> out;
  out.reserve(zs.size());
  std::vector<double> candidates;
  for (double z : zs) {
    candidates = base;
    if (op == ExtensionOp::kSum) {
      for (double kb : knots_b) candidates.push_back(z - kb);
    } else {
      for (double ka : knots_a) {
        if (ka != 0.0) candidates.push_back(z / ka);
      }
    }
    double best = 0.0;
    for (double c : candidates) {
      double m = 0.0;
      if (op == ExtensionOp::kSum) {
        m = std::min(a.evaluate(c), b.evaluate(z - c));
      } else if (c == 0.0) {
        m = z == 0.0 ? b.evaluate(0.0) : 0.0;
      } else {
        m = std::min(a.evaluate(z / c), b.evaluate(c));
      }
      best = std::max(best, m);
    }
    out.push_back({z, best});
  }
  return out;
}

double lipschitz_bound(const PiecewiseMF& mf) {
  const auto lv = mf.levels().values();
  const auto cuts = mf.cuts();
  double slope = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double da = lv[i + 1] - lv[i];
    const double dl = cuts[i + 1].lo - cuts[i].lo;
    const double dr = cuts[i].hi - cuts[i + 1].hi;
    for (double dx : {dl, dr}) {
      if (dx <= 0.0) return std::numeric_limits<double>::infinity();
      slope = std::max(slope, da / dx);
    }
  }
  return slope;
}

}  // namespace docit2::fuzzy
