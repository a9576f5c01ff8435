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

#ifndef DOCIT2_RATIONAL_HPP_
#define DOCIT2_RATIONAL_HPP_

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace docit2 {

using Rational = mpq_class;

/// num/den in lowest terms (the two-argument mpq_class constructor does not
/// reduce). Throws kDomain on a zero denominator.
Rational make_rational(long num, long den);

/// Exact binary value of `x` (every finite double is a dyadic rational).
Rational rational_from_double(double x);

/// The decimal the double was most likely written as: the shortest
/// round-trip representation, read back exactly. 0.33 -> 33/100.
Rational rational_from_shortest_decimal(double x);

/// Accepts "7", "-2/7", "3.5", "1e-3", "0.125e1". Throws kParse otherwise.
Rational parse_rational(std::string_view text);

/// "p/q" in lowest terms, or "p" when q == 1.
std::string to_string(const Rational& q);

double to_double(const Rational& q);
std::vector<double> to_doubles(std::span<const Rational> qs);

/// Shortest round-trip decimal rendering of a double.
std::string shortest_decimal(double x);

}  // namespace docit2

#endif  // DOCIT2_RATIONAL_HPP_
