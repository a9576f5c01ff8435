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

// Core and support of a label by bisection. The analyst shows a value and
// the decision maker answers whether it fully belongs to the label, belongs
// partially, or not at all. Each of the four boundaries keeps a bracket
// that shrinks with every answer until it is narrower than the resolution.

#ifndef DOCIT2_ELICITATION_CORE_SUPPORT_HPP_
#define DOCIT2_ELICITATION_CORE_SUPPORT_HPP_

#include <array>
#include <optional>
#include <string_view>

#include "docit2/fuzzy/piecewise_mf.hpp"

namespace docit2::elicitation {

struct CoreSupport {
  fuzzy::Interval support;
  fuzzy::Interval core;

  /// Throws kDomain unless core is inside support and both are ordered.
  void validate() const;
  friend bool operator==(const CoreSupport&, const CoreSupport&) = default;
};

enum class Boundary { kCoreLeft, kSupportLeft, kCoreRight, kSupportRight };
enum class ProbeAnswer { kYesFull, kPartial, kNo };

std::string_view to_string(Boundary b);
std::string_view to_string(ProbeAnswer a);
/// Throw kDomain on unknown names.
Boundary parse_boundary(std::string_view name);
ProbeAnswer parse_probe_answer(std::string_view name);

struct Probe {
  Boundary boundary;
  double value;
};

class CoreSupportDialog {
 public:
  /// The anchor (the label's value on the domain) is taken to be in the
  /// core. Resolution defaults to 1% of the domain width.
  CoreSupportDialog(fuzzy::Interval domain, double anchor, std::optional<double> resolution = {});

  /// Boundaries are settled in the order core-left, support-left,
  /// core-right, support-right. Empty once all brackets are resolved.
  std::optional<Probe> next_probe() const;
  bool done() const { return !next_probe(); }

  /// Applies the answer to the pending probe. Throws kInconsistent (state
  /// unchanged) when it contradicts earlier answers, kProtocol when done.
  void answer(ProbeAnswer a);

  /// Forgets everything learnt about one boundary.
  void restart(Boundary b);

  /// Bracket midpoints, snapped to the domain ends or the anchor when the
  /// bracket contains them. Throws kProtocol before the dialogue is done.
  CoreSupport result() const;

  const fuzzy::Interval& domain() const { return domain_; }
  double anchor() const { return anchor_; }
  double resolution() const { return resolution_; }
  const fuzzy::Interval& bracket(Boundary b) const { return brackets_[static_cast<int>(b)]; }
  int probes_answered() const { return answered_; }

 private:
  fuzzy::Interval initial(Boundary b) const;

  fuzzy::Interval domain_;
  double anchor_;
  double resolution_;
  std::array<fuzzy::Interval, 4> brackets_;
  int answered_ = 0;
};

}  // namespace docit2::elicitation

#endif  // DOCIT2_ELICITATION_CORE_SUPPORT_HPP_
