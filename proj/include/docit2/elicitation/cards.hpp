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

// Deck-of-cards computations: chains of items separated by blank cards,
// the values and ratio tables they induce, the adjustment of a revised
// table, and the inverse problem of turning values back into cards.

#ifndef DOCIT2_ELICITATION_CARDS_HPP_
#define DOCIT2_ELICITATION_CARDS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "docit2/rational.hpp"

namespace docit2::elicitation {

inline constexpr std::size_t kDefaultEnumerationCap = 10000;

/// Number of blank cards between two consecutive items: exact, or an
/// interval [lo, hi] when the decision maker hesitates.
class CardGap {
 public:
  static CardGap exact(std::int64_t e) { return CardGap(e, e); }
  static CardGap interval(std::int64_t lo, std::int64_t hi) { return CardGap(lo, hi); }

  bool is_exact() const { return lo_ == hi_; }
  std::int64_t lo() const { return lo_; }
  std::int64_t hi() const { return hi_; }
  /// Throws kMustEnumerateFirst on an interval.
  std::int64_t value() const;

  friend bool operator==(const CardGap&, const CardGap&) = default;

 private:
  CardGap(std::int64_t lo, std::int64_t hi);
  std::int64_t lo_;
  std::int64_t hi_;
};

struct CardChain {
  std::vector<std::string> items;  // ascending: items[0] is the lowest
  std::vector<CardGap> gaps;       // gaps[r] sits between items[r] and items[r+1]

  /// Throws kDomain unless there are >= 2 items and one gap fewer.
  void validate() const;
  bool all_exact() const;
  /// Chain over items "x1".."xp".
  static CardChain anonymous(std::vector<CardGap> gaps);
};

/// A(x_1) = 0, A(x_r) = sum over h < r of (e_h + 1).
std::vector<Rational> nonnormalized_values(const CardChain& chain);

/// Upper-triangular ratios a(s, r) = A(x_s) / A(x_r) for s > r >= 1
/// (0-based; item 0 carries value zero and is left out).
class RatioTable {
 public:
  struct Entry {
    Rational value;
    bool modified = false;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  RatioTable() = default;
  explicit RatioTable(std::size_t size) : size_(size) {}

  std::size_t size() const { return size_; }
  const std::map<std::pair<std::size_t, std::size_t>, Entry>& entries() const { return entries_; }
  const Entry& at(std::size_t s, std::size_t r) const;
  /// Stores a computed ratio (unmodified).
  void put(std::size_t s, std::size_t r, Rational value);
  /// Records a decision-maker revision. Throws kDomain on an unknown cell
  /// or a non-positive value.
  void modify(std::size_t s, std::size_t r, Rational value);
  bool any_modified() const;

  friend bool operator==(const RatioTable&, const RatioTable&) = default;

 private:
  std::size_t size_ = 0;
  std::map<std::pair<std::size_t, std::size_t>, Entry> entries_;
};

RatioTable ratio_table(std::span<const Rational> values);

/// A(x_r) / A(x_p).
std::vector<Rational> normalize(std::span<const Rational> values);

/// Which value the revised ratio multiplies in each deviation term.
enum class AdjustOrientation {
  kRatioDefinition,  // |A(x_s) - a(s,r) A(x_r)|, consistent with a = A(x_s)/A(x_r)
  kLiteral,          // |A(x_r) - a(s,r) A(x_s)|
};

struct Adjustment {
  std::vector<Rational> values;  // leading 0 included
  Rational objective;
};

/// Best-fit values A(x_r) >= 1 for the (possibly revised) table, exact,
/// lexicographically smallest among optima.
Adjustment adjust_values(const RatioTable& table,
                         AdjustOrientation orientation = AdjustOrientation::kRatioDefinition);

struct CardsFit {
  std::vector<std::int64_t> gaps;
  std::int64_t total = 0;  // h = sum of (gap + 1)
  Rational objective;
};

/// Cards whose proportions best match the value differences, scanning
/// h = p-1 .. h_max; ties prefer the smaller h. Throws kDomain if
/// h_max < p-1 or the values are not strictly increasing from 0.
CardsFit cards_from_values(std::span<const Rational> values, std::int64_t h_max);

/// Weights for criteria ranked by a chain whose first item is the least
/// relevant. With worst_is_zero the first weight is 0, otherwise the first
/// item starts at one unit. Aligned with chain.items; sums to 1 exactly.
std::vector<Rational> weights_from_cards(const CardChain& chain, bool worst_is_zero = true);

struct ValueScale {
  std::vector<std::string> labels;
  std::vector<Rational> values;
  Rational card_value;  // gamma

  /// Value of a label; throws kNotFound.
  const Rational& value_of(const std::string& label) const;
};

/// v(first) = 0, v(last) = 1, consecutive steps (e + 1) * gamma.
ValueScale label_values(std::vector<std::string> labels, std::span<const CardGap> gaps);

/// Every exact chain obtained by fixing each interval gap to an integer in
/// its range. The first gap varies slowest. Throws kTooManyChains.
std::vector<CardChain> enumerate_chains(const CardChain& chain,
                                        std::size_t cap = kDefaultEnumerationCap);
/// Size of the enumeration without building it.
std::uint64_t chain_count(const CardChain& chain);

/// Card counts c_i whose prefix sums over 10^m approximate x_i from below
/// to within 10^-m. x must ascend from 0 to 1. Throws kNeedsLargerM with
/// the first index whose floors collide.
std::vector<std::int64_t> tuple_to_cards(std::span<const Rational> x, int m);
/// Doubles are read as the decimals they print as (0.33 -> 33/100).
std::vector<std::int64_t> tuple_to_cards(std::span<const double> x, int m);

}  // namespace docit2::elicitation

#endif  // DOCIT2_ELICITATION_CARDS_HPP_
