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

// Admissible total orders on fuzzy numbers and on IT2 pairs.
//
// The type-1 order compares, in this sequence:
//   K1 = integral over alpha of the cut midpoint     (larger is greater)
//   K2 = minus the integral of the cut width          (narrower is greater)
//   K3 = (lo, hi) lexicographically at the merged levels, from alpha = 1 down
// All keys are evaluated in exact rational arithmetic, so the relation is a
// genuine total order on membership functions: "equal" means the functions
// coincide.

#ifndef DOCIT2_IT2_ORDER_HPP_
#define DOCIT2_IT2_ORDER_HPP_

#include <functional>
#include <string_view>

#include "docit2/fuzzy/piecewise_mf.hpp"
#include "docit2/it2/it2mf.hpp"
#include "docit2/rational.hpp"

namespace docit2::it2 {

enum class Ordering { kLess, kEqual, kGreater };

std::string_view to_string(Ordering o);
Ordering reverse(Ordering o);

/// Comparator on type-1 fuzzy numbers. Swappable: the IT2 orders below take
/// any admissible T1 order.
using T1Order = std::function<Ordering(const fuzzy::PiecewiseMF&, const fuzzy::PiecewiseMF&)>;

Ordering t1_admissible_order(const fuzzy::PiecewiseMF& a, const fuzzy::PiecewiseMF& b);

/// Exact value of the first two keys.
Rational midpoint_integral(const fuzzy::PiecewiseMF& mf);
Rational width_integral(const fuzzy::PiecewiseMF& mf);

/// Lower component first, then upper.
Ordering it2_order_1(const IT2MF& a, const IT2MF& b,
                     const T1Order& t1 = t1_admissible_order);
/// Upper component first, then lower.
Ordering it2_order_2(const IT2MF& a, const IT2MF& b,
                     const T1Order& t1 = t1_admissible_order);

enum class IT2OrderKind { kLowerFirst = 1, kUpperFirst = 2 };

Ordering it2_compare(IT2OrderKind kind, const IT2MF& a, const IT2MF& b);

}  // namespace docit2::it2

#endif  // DOCIT2_IT2_ORDER_HPP_
