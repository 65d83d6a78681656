// Copyright 2026 The DiversiTree Authors
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

// Test-only LP oracle: a textbook standard-form tableau simplex
// (max c x, A x <= b, x >= 0) with Bland's rule, plus the reduction of a
// general bounded LP onto that form. It shares no code with the library's
// bounded-variable solver.

#ifndef DIVERSITREE_TESTS_ORACLES_DENSE_LP_ORACLE_HPP_
#define DIVERSITREE_TESTS_ORACLES_DENSE_LP_ORACLE_HPP_

#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "diversitree/simplex.hpp"

namespace diversitree::testing {

enum class OracleStatus { kOptimal, kInfeasible, kUnbounded };

struct OracleResult {
  OracleStatus status = OracleStatus::kInfeasible;
  double objective = 0.0;  // minimization sense of the original LP
  std::vector<double> x;
};

// max c x s.t. A x <= b, x >= 0.
class StandardFormSimplex {
 public:
  using Vec = std::vector<double>;

  StandardFormSimplex(const std::vector<Vec>& a, const Vec& b, const Vec& c)
      : m_(static_cast<int>(b.size())),
        n_(static_cast<int>(c.size())),
        nonbasic_(n_ + 1),
        basic_(m_),
        d_(m_ + 2, Vec(n_ + 2)) {
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < n_; ++j) d_[i][j] = a[i][j];
    for (int i = 0; i < m_; ++i) {
      basic_[i] = n_ + i;
      d_[i][n_] = -1;
      d_[i][n_ + 1] = b[i];
    }
    for (int j = 0; j < n_; ++j) {
      nonbasic_[j] = j;
      d_[m_][j] = -c[j];
    }
    nonbasic_[n_] = -1;
    d_[m_ + 1][n_] = 1;
  }

  // Returns the optimum; -inf when infeasible, +inf when unbounded.
  double Solve(Vec& x) {
    int r = 0;
    for (int i = 1; i < m_; ++i)
      if (d_[i][n_ + 1] < d_[r][n_ + 1]) r = i;
    if (m_ > 0 && d_[r][n_ + 1] < -kEps) {
      Pivot(r, n_);
      if (!Run(2) || d_[m_ + 1][n_ + 1] < -kEps) return -kInfinity;
      for (int i = 0; i < m_; ++i) {
        if (basic_[i] != -1) continue;
        int s = 0;
        for (int j = 1; j <= n_; ++j) {
          if (std::make_pair(d_[i][j], nonbasic_[j]) < std::make_pair(d_[i][s], nonbasic_[s])) s = j;
        }
        Pivot(i, s);
      }
    }
    const bool ok = Run(1);
    x.assign(n_, 0.0);
    for (int i = 0; i < m_; ++i)
      if (basic_[i] < n_ && basic_[i] >= 0) x[basic_[i]] = d_[i][n_ + 1];
    return ok ? d_[m_][n_ + 1] : kInfinity;
  }

 private:
  static constexpr double kEps = 1e-9;
  static constexpr double kInfinity = std::numeric_limits<double>::infinity();

  void Pivot(int r, int s) {
    const double inv = 1.0 / d_[r][s];
    for (int i = 0; i < m_ + 2; ++i) {
      if (i == r || std::abs(d_[i][s]) <= kEps) continue;
      const double f = d_[i][s] * inv;
      for (int j = 0; j < n_ + 2; ++j) d_[i][j] -= d_[r][j] * f;
      d_[i][s] = d_[r][s] * f;
    }
    for (int j = 0; j < n_ + 2; ++j)
      if (j != s) d_[r][j] *= inv;
    for (int i = 0; i < m_ + 2; ++i)
      if (i != r) d_[i][s] *= -inv;
    d_[r][s] = inv;
    std::swap(basic_[r], nonbasic_[s]);
  }

  bool Run(int phase) {
    const int x = m_ + phase - 1;
    for (;;) {
      int s = -1;
      for (int j = 0; j <= n_; ++j) {
        if (nonbasic_[j] == -phase) continue;
        if (s == -1 || std::make_pair(d_[x][j], nonbasic_[j]) <
                           std::make_pair(d_[x][s], nonbasic_[s])) {
          s = j;
        }
      }
      if (d_[x][s] >= -kEps) return true;
      int r = -1;
      for (int i = 0; i < m_; ++i) {
        if (d_[i][s] <= kEps) continue;
        if (r == -1 || std::make_pair(d_[i][n_ + 1] / d_[i][s], basic_[i]) <
                           std::make_pair(d_[r][n_ + 1] / d_[r][s], basic_[r])) {
          r = i;
        }
      }
      if (r == -1) return false;
      Pivot(r, s);
    }
  }

  int m_;
  int n_;
  std::vector<int> nonbasic_;
  std::vector<int> basic_;
  std::vector<Vec> d_;
};

// Reduces min c x, row_lower <= A x <= row_upper, col bounds, onto the
// standard form by shifting/reflecting bounded columns, splitting free ones,
// and emitting upper bounds and row sides as <= rows.
inline OracleResult SolveWithOracle(const LpProblem& lp, const std::vector<double>& lower,
                                    const std::vector<double>& upper) {
  const int n = lp.num_cols;
  for (int j = 0; j < n; ++j) {
    if (lower[j] > upper[j]) return {};
  }
  // x_j = offset_j + sum_k coef_jk y_k
  struct Map {
    double offset = 0.0;
    std::vector<std::pair<int, double>> parts;
  };
  std::vector<Map> maps(n);
  int y = 0;
  std::vector<std::pair<int, double>> bound_rows;  // (y index, upper bound on y)
  for (int j = 0; j < n; ++j) {
    const bool lo = std::isfinite(lower[j]);
    const bool hi = std::isfinite(upper[j]);
    if (lo) {
      maps[j] = {lower[j], {{y, 1.0}}};
      if (hi) bound_rows.emplace_back(y, upper[j] - lower[j]);
      ++y;
    } else if (hi) {
      maps[j] = {upper[j], {{y, -1.0}}};
      ++y;
    } else {
      maps[j] = {0.0, {{y, 1.0}, {y + 1, -1.0}}};
      y += 2;
    }
  }
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  for (const auto& [idx, ub] : bound_rows) {
    std::vector<double> row(y, 0.0);
    row[idx] = 1.0;
    a.push_back(row);
    b.push_back(ub);
  }
  for (int i = 0; i < lp.num_rows(); ++i) {
    std::vector<double> row(y, 0.0);
    double shift = 0.0;
    for (const Term& t : lp.rows[i]) {
      shift += t.value * maps[t.index].offset;
      for (const auto& [k, coef] : maps[t.index].parts) row[k] += t.value * coef;
    }
    if (std::isfinite(lp.row_upper[i])) {
      a.push_back(row);
      b.push_back(lp.row_upper[i] - shift);
    }
    if (std::isfinite(lp.row_lower[i])) {
      for (double& v : row) v = -v;
      a.push_back(row);
      b.push_back(shift - lp.row_lower[i]);
    }
  }
  std::vector<double> c(y, 0.0);
  double constant = 0.0;
  for (int j = 0; j < n; ++j) {
    constant += lp.cost[j] * maps[j].offset;
    for (const auto& [k, coef] : maps[j].parts) c[k] -= lp.cost[j] * coef;
  }
  StandardFormSimplex solver(a, b, c);
  std::vector<double> sol;
  const double value = solver.Solve(sol);
  OracleResult result;
  if (value == -std::numeric_limits<double>::infinity()) {
    result.status = OracleStatus::kInfeasible;
    return result;
  }
  if (value == std::numeric_limits<double>::infinity()) {
    result.status = OracleStatus::kUnbounded;
    return result;
  }
  result.status = OracleStatus::kOptimal;
  result.objective = constant - value;
  result.x.assign(n, 0.0);
  for (int j = 0; j < n; ++j) {
    result.x[j] = maps[j].offset;
    for (const auto& [k, coef] : maps[j].parts) result.x[j] += coef * sol[k];
  }
  return result;
}

inline OracleResult SolveWithOracle(const LpProblem& lp) {
  return SolveWithOracle(lp, lp.col_lower, lp.col_upper);
}

}  // namespace diversitree::testing

#endif  // DIVERSITREE_TESTS_ORACLES_DENSE_LP_ORACLE_HPP_
