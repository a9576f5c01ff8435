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
#include <optional>
#include <string>

#include "docit2/error.hpp"
#include "docit2/solvers/solvers.hpp"

namespace docit2::solvers {

namespace {

// Dense tableau over nonnegative columns, Bland's rule throughout.
class Tableau {
 public:
  Tableau(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs)
      : a_(std::move(rows)), b_(std::move(rhs)) {
    columns_ = a_.empty() ? 0 : a_.front().size();
    barred_.assign(columns_, false);
  }

  // Phase 1 with one artificial per row; leaves a feasible basis over the
  // original columns and drops redundant rows.
  void make_feasible() {
    const std::size_t m = a_.size();
    for (std::size_t i = 0; i < m; ++i) {
      if (b_[i] < 0) {
        for (auto& v : a_[i]) v = -v;
        b_[i] = -b_[i];
      }
      for (std::size_t k = 0; k < m; ++k) a_[i].push_back(Rational(i == k ? 1 : 0));
    }
    const std::size_t original = columns_;
    columns_ += m;
    barred_.assign(columns_, false);
    basis_.resize(m);
    for (std::size_t i = 0; i < m; ++i) basis_[i] = original + i;

    std::vector<Rational> cost(columns_, Rational(0));
    for (std::size_t k = original; k < columns_; ++k) cost[k] = 1;
    minimize(cost);
    for (std::size_t i = 0; i < m; ++i) {
      if (basis_[i] >= original && b_[i] != 0) throw Error(ErrorKind::kInternal, "linear program is infeasible");
    }

    // Pivot zero-valued artificials out of the basis.
    for (std::size_t i = 0; i < a_.size();) {
      if (basis_[i] < original) {
        ++i;
        continue;
      }
      std::optional<std::size_t> col;
      for (std::size_t j = 0; j < original && !col; ++j) {
        if (a_[i][j] != 0) col = j;
      }
      if (col) {
        pivot(i, *col);
        ++i;
      } else {
        a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(i));
        b_.erase(b_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
    for (auto& row : a_) row.resize(original);
    columns_ = original;
    barred_.assign(columns_, false);
  }

  // Returns the reduced costs at the optimum.
  std::vector<Rational> minimize(const std::vector<Rational>& cost) {
    for (;;) {
      const auto reduced = reduced_costs(cost);
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < columns_ && !entering; ++j) {
        if (!barred_[j] && reduced[j] < 0) entering = j;
      }
      if (!entering) return reduced;

      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t i = 0; i < a_.size(); ++i) {
        if (a_[i][*entering] <= 0) continue;
        Rational ratio = b_[i] / a_[i][*entering];
        if (!leaving || ratio < best || (ratio == best && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (!leaving) throw Error(ErrorKind::kInternal, "linear program is unbounded");
      pivot(*leaving, *entering);
    }
  }

  // Keeps columns with positive reduced cost at zero from now on, which
  // restricts later objectives to the current optimal face.
  void bar_positive(const std::vector<Rational>& reduced) {
    for (std::size_t j = 0; j < columns_; ++j) {
      if (reduced[j] > 0) barred_[j] = true;
    }
  }

  std::vector<Rational> solution() const {
    std::vector<Rational> x(columns_, Rational(0));
    for (std::size_t i = 0; i < a_.size(); ++i) x[basis_[i]] = b_[i];
    return x;
  }

 private:
  std::vector<Rational> reduced_costs(const std::vector<Rational>& cost) const {
    std::vector<Rational> d(cost.begin(), cost.begin() + static_cast<std::ptrdiff_t>(columns_));
    for (std::size_t i = 0; i < a_.size(); ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < columns_; ++j) {
        if (a_[i][j] != 0) d[j] -= cb * a_[i][j];
      }
    }
    return d;
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = a_[r][c];
    for (auto& v : a_[r]) v /= p;
    b_[r] /= p;
    for (std::size_t i = 0; i < a_.size(); ++i) {
      if (i == r || a_[i][c] == 0) continue;
      const Rational f = a_[i][c];
      for (std::size_t j = 0; j < columns_; ++j) {
        if (a_[r][j] != 0) a_[i][j] -= f * a_[r][j];
      }
      b_[i] -= f * b_[r];
    }
    basis_[r] = c;
  }

  std::vector<std::vector<Rational>> a_;
  std::vector<Rational> b_;
  std::vector<std::size_t> basis_;
  std::vector<bool> barred_;
  std::size_t columns_ = 0;
};

void validate(const LPProblem& p) {
  const std::size_t n = p.lower_bounds.size();
  for (std::size_t t = 0; t < p.terms.size(); ++t) {
    if (p.terms[t].u >= n || p.terms[t].v >= n) {
      throw Error(ErrorKind::kDomain, "term references an unknown variable", "/terms/" + std::to_string(t));
    }
  }
  for (std::size_t k = 0; k < p.constraints.size(); ++k) {
    if (p.constraints[k].coefficients.size() != n) {
      throw Error(ErrorKind::kDomain, "constraint needs one coefficient per variable",
                  "/constraints/" + std::to_string(k));
    }
  }
}

}  // namespace

LPSolution solve_abs_lp(const LPProblem& problem) {
  validate(problem);
  LPProblem p = problem;
  for (auto& lb : p.lower_bounds) lb.canonicalize();
  for (auto& t : p.terms) t.c.canonicalize();
  for (auto& c : p.constraints) {
    for (auto& a : c.coefficients) a.canonicalize();
    c.rhs.canonicalize();
  }
  const std::size_t n = p.lower_bounds.size();
  const std::size_t t = p.terms.size();
  std::size_t slack_count = 0;
  for (const auto& c : p.constraints) slack_count += c.sense == Sense::kEqual ? 0 : 1;

  // Columns: y = x - lb (n), deviation pairs (2t), constraint slacks.
  const std::size_t columns = n + 2 * t + slack_count;
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  for (std::size_t k = 0; k < t; ++k) {
    const auto& term = p.terms[k];
    std::vector<Rational> row(columns, Rational(0));
    // y_u - c y_v - plus + minus = c lb_v - lb_u
    row[term.u] += 1;
    row[term.v] -= term.c;
    row[n + 2 * k] = -1;
    row[n + 2 * k + 1] = 1;
    rows.push_back(std::move(row));
    rhs.push_back(term.c * p.lower_bounds[term.v] - p.lower_bounds[term.u]);
  }
  std::size_t slack = n + 2 * t;
  for (const auto& c : p.constraints) {
    std::vector<Rational> row(columns, Rational(0));
    Rational shifted = c.rhs;
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = c.coefficients[j];
      shifted -= c.coefficients[j] * p.lower_bounds[j];
    }
    if (c.sense == Sense::kLessEqual) row[slack++] = 1;
    if (c.sense == Sense::kGreaterEqual) row[slack++] = -1;
    rows.push_back(std::move(row));
    rhs.push_back(shifted);
  }

  std::vector<Rational> y(columns, Rational(0));
  if (!rows.empty()) {
    Tableau tableau(std::move(rows), std::move(rhs));
    tableau.make_feasible();
    std::vector<Rational> cost(columns, Rational(0));
    for (std::size_t j = n; j < n + 2 * t; ++j) cost[j] = 1;
    tableau.bar_positive(tableau.minimize(cost));
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> lex(columns, Rational(0));
      lex[j] = 1;
      tableau.bar_positive(tableau.minimize(lex));
    }
    y = tableau.solution();
  }

  LPSolution out;
  out.x.resize(n);
  for (std::size_t j = 0; j < n; ++j) out.x[j] = y[j] + p.lower_bounds[j];
  out.objective = 0;
  for (const auto& term : p.terms) out.objective += abs(Rational(out.x[term.u] - term.c * out.x[term.v]));
  return out;
}

}  // namespace docit2::solvers
