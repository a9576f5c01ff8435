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

#include "docit2/elicitation/cards.hpp"

#include <algorithm>
#include <string>

#include "docit2/error.hpp"
#include "docit2/solvers/solvers.hpp"

namespace docit2::elicitation {

namespace {

std::string index_path(std::string_view base, std::size_t i) {
  return std::string(base) + "/" + std::to_string(i);
}

void require_increasing_from_zero(std::span<const Rational> values) {
  if (values.size() < 2) throw Error(ErrorKind::kDomain, "need at least two values", "/values");
  if (values.front() != 0) throw Error(ErrorKind::kDomain, "the first value must be 0", "/values/0");
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (!(values[i] > values[i - 1])) {
      throw Error(ErrorKind::kDomain, "values must be strictly increasing", index_path("/values", i));
    }
  }
}

}  // namespace

CardGap::CardGap(std::int64_t lo, std::int64_t hi) : lo_(lo), hi_(hi) {
  if (lo < 0) throw Error(ErrorKind::kDomain, "card counts are non-negative");
  if (lo > hi) throw Error(ErrorKind::kDomain, "card interval has lo > hi");
}

std::int64_t CardGap::value() const {
  if (!is_exact()) {
    throw Error(ErrorKind::kMustEnumerateFirst,
                "gap [" + std::to_string(lo_) + "," + std::to_string(hi_) + "] must be enumerated first");
  }
  return lo_;
}

void CardChain::validate() const {
  if (items.size() < 2) throw Error(ErrorKind::kDomain, "a chain needs at least two items", "/items");
  if (gaps.size() + 1 != items.size()) {
    throw Error(ErrorKind::kDomain, "a chain of " + std::to_string(items.size()) + " items needs " +
                                        std::to_string(items.size() - 1) + " gaps", "/gaps");
  }
}

bool CardChain::all_exact() const {
  return std::all_of(gaps.begin(), gaps.end(), [](const CardGap& g) { return g.is_exact(); });
}

CardChain CardChain::anonymous(std::vector<CardGap> gaps) {
  CardChain chain;
  for (std::size_t i = 0; i <= gaps.size(); ++i) chain.items.push_back("x" + std::to_string(i + 1));
  chain.gaps = std::move(gaps);
  return chain;
}

std::vector<Rational> nonnormalized_values(const CardChain& chain) {
  chain.validate();
  std::vector<Rational> values{Rational(0)};
  for (const auto& gap : chain.gaps) values.push_back(values.back() + gap.value() + 1);
  return values;
}

const RatioTable::Entry& RatioTable::at(std::size_t s, std::size_t r) const {
  const auto it = entries_.find({s, r});
  if (it == entries_.end()) {
    throw Error(ErrorKind::kDomain, "no ratio cell (" + std::to_string(s) + "," + std::to_string(r) + ")");
  }
  return it->second;
}

void RatioTable::put(std::size_t s, std::size_t r, Rational value) {
  value.canonicalize();
  entries_[{s, r}] = Entry{std::move(value), false};
}

void RatioTable::modify(std::size_t s, std::size_t r, Rational value) {
  const auto it = entries_.find({s, r});
  if (it == entries_.end()) {
    throw Error(ErrorKind::kDomain, "no ratio cell (" + std::to_string(s) + "," + std::to_string(r) + ")");
  }
  if (!(value > 0)) throw Error(ErrorKind::kDomain, "ratios must be positive");
  value.canonicalize();
  it->second = Entry{std::move(value), true};
}

bool RatioTable::any_modified() const {
  return std::any_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.second.modified; });
}

RatioTable ratio_table(std::span<const Rational> values) {
  RatioTable table(values.size());
  for (std::size_t s = 1; s < values.size(); ++s) {
    for (std::size_t r = 1; r < s; ++r) {
      if (values[r] == 0) throw Error(ErrorKind::kInternal, "zero value in ratio denominator");
      table.put(s, r, values[s] / values[r]);
    }
  }
  return table;
}

std::vector<Rational> normalize(std::span<const Rational> values) {
  if (values.empty() || values.back() == 0) throw Error(ErrorKind::kDomain, "cannot normalise by zero");
  std::vector<Rational> out;
  for (const auto& v : values) out.push_back(v / values.back());
  return out;
}

Adjustment adjust_values(const RatioTable& table, AdjustOrientation orientation) {
  if (table.size() < 2) throw Error(ErrorKind::kDomain, "table needs at least two items");
  solvers::LPProblem lp;
  lp.lower_bounds.assign(table.size() - 1, Rational(1));
  for (const auto& [key, entry] : table.entries()) {
    const auto [s, r] = key;
    if (orientation == AdjustOrientation::kRatioDefinition) {
      lp.terms.push_back({s - 1, r - 1, entry.value});
    } else {
      lp.terms.push_back({r - 1, s - 1, entry.value});
    }
  }
  const auto solution = solvers::solve_abs_lp(lp);
  Adjustment out{{Rational(0)}, solution.objective};
  out.values.insert(out.values.end(), solution.x.begin(), solution.x.end());
  return out;
}

CardsFit cards_from_values(std::span<const Rational> values, std::int64_t h_max) {
  require_increasing_from_zero(values);
  const auto slots = static_cast<std::int64_t>(values.size()) - 1;
  if (h_max < slots) {
    throw Error(ErrorKind::kDomain, "h_max must be at least " + std::to_string(slots), "/h_max");
  }
  std::vector<Rational> shares;
  for (std::size_t r = 1; r < values.size(); ++r) shares.push_back((values[r] - values[r - 1]) / values.back());

  CardsFit best;
  bool found = false;
  solvers::IntAllocProblem alloc;
  for (std::int64_t h = slots; h <= h_max; ++h) {
    alloc.total = h;
    alloc.targets.clear();
    for (const auto& s : shares) alloc.targets.push_back(s * h);
    const auto sol = solvers::solve_int_alloc(alloc);
    if (!found || sol.objective < best.objective) {
      best.gaps.clear();
      for (auto c : sol.shares) best.gaps.push_back(c - 1);
      best.total = h;
      best.objective = sol.objective;
      found = true;
    }
  }
  return best;
}

std::vector<Rational> weights_from_cards(const CardChain& chain, bool worst_is_zero) {
  auto raw = nonnormalized_values(chain);
  if (!worst_is_zero) {
    for (auto& v : raw) v += 1;
  }
  Rational total = 0;
  for (const auto& v : raw) total += v;
  for (auto& v : raw) v /= total;
  return raw;
}

const Rational& ValueScale::value_of(const std::string& label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw Error(ErrorKind::kNotFound, "unknown label " + label);
  return values[static_cast<std::size_t>(it - labels.begin())];
}

ValueScale label_values(std::vector<std::string> labels, std::span<const CardGap> gaps) {
  CardChain chain{std::move(labels), {gaps.begin(), gaps.end()}};
  const auto raw = nonnormalized_values(chain);
  ValueScale scale{std::move(chain.items), normalize(raw), Rational(1) / raw.back()};
  return scale;
}

std::uint64_t chain_count(const CardChain& chain) {
  std::uint64_t count = 1;
  for (const auto& g : chain.gaps) {
    const auto width = static_cast<std::uint64_t>(g.hi() - g.lo()) + 1;
    // Saturate instead of overflowing; any value above the cap is rejected.
    count = count > UINT64_MAX / width ? UINT64_MAX : count * width;
  }
  return count;
}

std::vector<CardChain> enumerate_chains(const CardChain& chain, std::size_t cap) {
  chain.validate();
  const auto count = chain_count(chain);
  if (count > cap) {
    throw Error(ErrorKind::kTooManyChains,
                "hesitation intervals yield " + std::to_string(count) + " chains, above the cap of " +
                    std::to_string(cap));
  }
  std::vector<CardChain> out;
  std::vector<std::int64_t> pick;
  for (const auto& g : chain.gaps) pick.push_back(g.lo());
  for (;;) {
    CardChain exact{chain.items, {}};
    for (auto e : pick) exact.gaps.push_back(CardGap::exact(e));
    out.push_back(std::move(exact));
    // Odometer with the last gap fastest.
    std::size_t k = pick.size();
    while (k > 0) {
      --k;
      if (pick[k] < chain.gaps[k].hi()) {
        ++pick[k];
        break;
      }
      pick[k] = chain.gaps[k].lo();
      if (k == 0) return out;
    }
    if (pick.empty()) return out;
  }
}

std::vector<std::int64_t> tuple_to_cards(std::span<const Rational> x, int m) {
  if (m < 1 || m > 18) throw Error(ErrorKind::kDomain, "precision m must be in 1..18", "/m");
  if (x.size() < 2) throw Error(ErrorKind::kDomain, "need at least two coordinates", "/x");
  if (x.front() != 0) throw Error(ErrorKind::kDomain, "the first coordinate must be 0", "/x/0");
  if (x.back() != 1) throw Error(ErrorKind::kDomain, "the last coordinate must be 1", index_path("/x", x.size() - 1));
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(m));
  std::vector<std::int64_t> cards;
  mpz_class previous = 0;
  for (std::size_t i = 1; i < x.size(); ++i) {
    const Rational scaled = x[i] * scale;
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    if (fl <= previous) {
      throw Error(ErrorKind::kNeedsLargerM,
                  "floor(10^" + std::to_string(m) + " x) does not increase at index " + std::to_string(i),
                  index_path("/x", i));
    }
    cards.push_back(mpz_class(fl - previous).get_si());
    previous = fl;
  }
  return cards;
}

std::vector<std::int64_t> tuple_to_cards(std::span<const double> x, int m) {
  std::vector<Rational> exact;
  for (double v : x) exact.push_back(rational_from_shortest_decimal(v));
  return tuple_to_cards(exact, m);
}

}  // namespace docit2::elicitation
