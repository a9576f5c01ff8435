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

#include "docit2/elicitation/core_support.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "docit2/error.hpp"

namespace docit2::elicitation {

namespace {

constexpr std::array kOrder{Boundary::kCoreLeft, Boundary::kSupportLeft, Boundary::kCoreRight,
                            Boundary::kSupportRight};

bool is_left(Boundary b) { return b == Boundary::kCoreLeft || b == Boundary::kSupportLeft; }

}  // namespace

void CoreSupport::validate() const {
  if (!(support.lo <= support.hi) || !(core.lo <= core.hi)) {
    throw Error(ErrorKind::kDomain, "interval with lo > hi");
  }
  if (!support.contains(core)) throw Error(ErrorKind::kDomain, "core must lie inside the support");
}

std::string_view to_string(Boundary b) {
  switch (b) {
    case Boundary::kCoreLeft: return "core_left";
    case Boundary::kSupportLeft: return "support_left";
    case Boundary::kCoreRight: return "core_right";
    case Boundary::kSupportRight: return "support_right";
  }
  return "?";
}

std::string_view to_string(ProbeAnswer a) {
  switch (a) {
    case ProbeAnswer::kYesFull: return "yes_full";
    case ProbeAnswer::kPartial: return "partial";
    case ProbeAnswer::kNo: return "no";
  }
  return "?";
}

Boundary parse_boundary(std::string_view name) {
  for (auto b : kOrder) {
    if (to_string(b) == name) return b;
  }
  throw Error(ErrorKind::kDomain, "unknown boundary '" + std::string(name) + "'");
}

ProbeAnswer parse_probe_answer(std::string_view name) {
  for (auto a : {ProbeAnswer::kYesFull, ProbeAnswer::kPartial, ProbeAnswer::kNo}) {
    if (to_string(a) == name) return a;
  }
  throw Error(ErrorKind::kDomain, "unknown answer '" + std::string(name) + "'; expected yes_full, partial or no");
}

CoreSupportDialog::CoreSupportDialog(fuzzy::Interval domain, double anchor, std::optional<double> resolution)
    : domain_(domain), anchor_(anchor), resolution_(resolution.value_or(0.01 * domain.width())) {
  if (!(domain.lo < domain.hi)) throw Error(ErrorKind::kDomain, "domain must have positive width");
  if (!domain.contains(anchor)) throw Error(ErrorKind::kDomain, "anchor outside the domain");
  if (!(resolution_ > 0.0)) throw Error(ErrorKind::kDomain, "resolution must be positive");
  for (auto b : kOrder) brackets_[static_cast<int>(b)] = initial(b);
}

fuzzy::Interval CoreSupportDialog::initial(Boundary b) const {
  return is_left(b) ? fuzzy::Interval{domain_.lo, anchor_} : fuzzy::Interval{anchor_, domain_.hi};
}

std::optional<Probe> CoreSupportDialog::next_probe() const {
  for (auto b : kOrder) {
    const auto& br = bracket(b);
    if (br.width() > resolution_) return Probe{b, br.midpoint()};
  }
  return std::nullopt;
}

void CoreSupportDialog::answer(ProbeAnswer a) {
  const auto probe = next_probe();
  if (!probe) throw Error(ErrorKind::kProtocol, "core and support are already settled");
  const double x = probe->value;
  auto br = brackets_;
  // On the left the boundaries bound the label from below; mirror on the
  // right by swapping which bracket end moves.
  const bool left = is_left(probe->boundary);
  auto at_most = [&](fuzzy::Interval& i) {
    if (left) {
      i.hi = std::min(i.hi, x);
    } else {
      i.lo = std::max(i.lo, x);
    }
  };
  auto beyond = [&](fuzzy::Interval& i) {
    if (left) {
      i.lo = std::max(i.lo, x);
    } else {
      i.hi = std::min(i.hi, x);
    }
  };
  auto& core = br[static_cast<int>(left ? Boundary::kCoreLeft : Boundary::kCoreRight)];
  auto& supp = br[static_cast<int>(left ? Boundary::kSupportLeft : Boundary::kSupportRight)];
  switch (a) {
    case ProbeAnswer::kYesFull:
      at_most(core);
      at_most(supp);
      break;
    case ProbeAnswer::kPartial:
      at_most(supp);
      beyond(core);
      break;
    case ProbeAnswer::kNo:
      beyond(supp);
      beyond(core);
      break;
  }
  // Support boundaries lie outside the core boundaries.
  auto& cl = br[static_cast<int>(Boundary::kCoreLeft)];
  auto& sl = br[static_cast<int>(Boundary::kSupportLeft)];
  auto& cr = br[static_cast<int>(Boundary::kCoreRight)];
  auto& sr = br[static_cast<int>(Boundary::kSupportRight)];
  sl.hi = std::min(sl.hi, cl.hi);
  cl.lo = std::max(cl.lo, sl.lo);
  sr.lo = std::max(sr.lo, cr.lo);
  cr.hi = std::min(cr.hi, sr.hi);
  for (auto b : kOrder) {
    const auto& i = br[static_cast<int>(b)];
    if (i.lo > i.hi) {
      throw Error(ErrorKind::kInconsistent,
                  "answer '" + std::string(to_string(a)) + "' at " + std::to_string(x) +
                      " contradicts earlier answers for " + std::string(to_string(b)) + "; restart " +
                      std::string(to_string(probe->boundary)));
    }
  }
  brackets_ = br;
  ++answered_;
}

void CoreSupportDialog::restart(Boundary b) { brackets_[static_cast<int>(b)] = initial(b); }

CoreSupport CoreSupportDialog::result() const {
  if (!done()) throw Error(ErrorKind::kProtocol, "core and support are not settled yet");
  auto estimate = [&](Boundary b) {
    const auto& i = bracket(b);
    for (double snap : {domain_.lo, domain_.hi, anchor_}) {
      if (i.contains(snap)) return snap;
    }
    return i.midpoint();
  };
  const double cl = estimate(Boundary::kCoreLeft);
  const double cr = estimate(Boundary::kCoreRight);
  const double sl = std::min(estimate(Boundary::kSupportLeft), cl);
  const double sr = std::max(estimate(Boundary::kSupportRight), cr);
  return CoreSupport{{sl, sr}, {cl, cr}};
}

}  // namespace docit2::elicitation
