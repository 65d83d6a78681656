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

// Dense bounded-variable simplex for node relaxations.
//
// The LP
//
//   min c^T x   s.t.  row_lower <= A x <= row_upper,  col_lower <= x <= col_upper
//
// is solved over the columns [A | -I] with one slack per row (s = A x) so that
// every constraint becomes an equality with zero right-hand side. A cold solve
// starts from the slack basis and repairs violated rows with artificial
// columns (phase one), then optimizes c (phase two). Pricing is Dantzig with a
// lowest-index tie-break; after 2 (n + m) consecutive degenerate pivots it
// switches to Bland's rule until a nondegenerate step happens.
//
// A warm start refactorizes a parent basis under new column bounds and runs
// the dual simplex, falling back to a cold solve if the basis is singular or
// the dual loop does not converge.

#ifndef DIVERSITREE_SIMPLEX_HPP_
#define DIVERSITREE_SIMPLEX_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "diversitree/error.hpp"
#include "diversitree/model.hpp"

namespace diversitree {

struct LpProblem {
  int num_cols = 0;
  std::vector<double> cost;
  std::vector<double> col_lower;
  std::vector<double> col_upper;
  std::vector<std::vector<Term>> rows;  // Term::index is a column
  std::vector<double> row_lower;
  std::vector<double> row_upper;

  int num_rows() const { return static_cast<int>(rows.size()); }
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kStalled };

inline const char* LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
    case LpStatus::kStalled:
      return "stalled";
  }
  return "?";
}

enum class VarStatus : std::uint8_t { kBasic, kAtLower, kAtUpper, kFree };

// Basis over the n + m structural and slack columns.
struct Basis {
  std::vector<int> basic;           // size m, column per row position
  std::vector<VarStatus> status;    // size n + m
};

struct SimplexOptions {
  double feasibility_tolerance = 1e-6;
  double optimality_tolerance = 1e-9;
  double pivot_tolerance = 1e-9;
  int max_iterations = 0;  // 0: 200 (n + m) + 1000
};

struct LpResult {
  LpStatus status = LpStatus::kStalled;
  double objective = 0.0;
  std::vector<double> primal;            // n
  std::vector<double> duals;             // m, y with c - A^T y = reduced costs
  double dual_objective = 0.0;           // from bounds and reduced costs only
  bool dual_feasible = false;
  std::shared_ptr<const Basis> basis;    // set when optimal
  int iterations = 0;
  bool warm_started = false;             // the dual warm start was used
  std::vector<int> fractional_vars;      // filled by the relaxation layer
};

namespace simplex_internal {

class Tableau {
 public:
  Tableau(const LpProblem& lp, std::span<const double> col_lower,
          std::span<const double> col_upper, const SimplexOptions& options)
      : lp_(lp),
        options_(options),
        n_(lp.num_cols),
        m_(lp.num_rows()),
        total_(n_ + m_) {
    lo_.resize(total_);
    hi_.resize(total_);
    for (int j = 0; j < n_; ++j) {
      lo_[j] = col_lower[j];
      hi_[j] = col_upper[j];
    }
    for (int i = 0; i < m_; ++i) {
      lo_[n_ + i] = lp.row_lower[i];
      hi_[n_ + i] = lp.row_upper[i];
    }
    max_iterations_ = options.max_iterations > 0 ? options.max_iterations
                                                 : 200 * (n_ + m_) + 1000;
  }

  bool BoundsConsistent() const {
    for (int j = 0; j < total_; ++j) {
      if (lo_[j] > hi_[j] + options_.feasibility_tolerance) return false;
    }
    return true;
  }

  LpResult SolveCold() {
    LpResult result;
    if (!BoundsConsistent()) {
      result.status = LpStatus::kInfeasible;
      return result;
    }
    // Structurals start nonbasic at a finite bound (or 0 when free).
    x_.assign(total_, 0.0);
    status_.assign(total_, VarStatus::kFree);
    for (int j = 0; j < n_; ++j) PlaceAtBound(j, VarStatus::kAtLower);
    std::vector<double> activity(m_, 0.0);
    for (int i = 0; i < m_; ++i) {
      for (const Term& t : lp_.rows[i]) activity[i] += t.value * x_[t.index];
    }
    // Slack basis, with an artificial on each row whose activity is outside
    // its range: A_i x - s_i + sign * a_i = 0 with s_i at the violated bound.
    std::vector<int> art_row;
    std::vector<double> art_sign;
    basic_.assign(m_, -1);
    for (int i = 0; i < m_; ++i) {
      const int s = n_ + i;
      const double r = activity[i];
      if (r < lo_[s] - options_.feasibility_tolerance ||
          r > hi_[s] + options_.feasibility_tolerance) {
        const bool below = r < lo_[s];
        status_[s] = below ? VarStatus::kAtLower : VarStatus::kAtUpper;
        x_[s] = below ? lo_[s] : hi_[s];
        art_row.push_back(i);
        art_sign.push_back(x_[s] - r > 0.0 ? 1.0 : -1.0);
      } else {
        status_[s] = VarStatus::kBasic;
        basic_[i] = s;
      }
    }
    const int num_art = static_cast<int>(art_row.size());
    width_ = total_ + num_art;
    lo_.resize(width_, 0.0);
    hi_.resize(width_, kInf);
    x_.resize(width_, 0.0);
    status_.resize(width_, VarStatus::kBasic);
    // Initial B is diagonal: -1 for slacks, sign for artificials.
    tab_.assign(static_cast<std::size_t>(m_) * width_, 0.0);
    std::vector<double> diag(m_, -1.0);
    for (int k = 0; k < num_art; ++k) {
      basic_[art_row[k]] = total_ + k;
      diag[art_row[k]] = art_sign[k];
    }
    for (int i = 0; i < m_; ++i) {
      for (const Term& t : lp_.rows[i]) At(i, t.index) = t.value / diag[i];
      At(i, n_ + i) = -1.0 / diag[i];
    }
    for (int k = 0; k < num_art; ++k) At(art_row[k], total_ + k) = 1.0;
    RecomputeBasics();

    int iterations = 0;
    if (num_art > 0) {
      cost_.assign(width_, 0.0);
      for (int k = 0; k < num_art; ++k) cost_[total_ + k] = 1.0;
      const LpStatus phase1 = Primal(iterations);
      if (phase1 == LpStatus::kStalled) {
        result.status = LpStatus::kStalled;
        result.iterations = iterations;
        return result;
      }
      double infeasibility = 0.0;
      for (int k = 0; k < num_art; ++k) infeasibility += x_[total_ + k];
      if (infeasibility > options_.feasibility_tolerance) {
        result.status = LpStatus::kInfeasible;
        result.iterations = iterations;
        return result;
      }
      DriveOutArtificials();
    }
    cost_.assign(width_, 0.0);
    for (int j = 0; j < n_; ++j) cost_[j] = lp_.cost[j];
    const LpStatus phase2 = Primal(iterations);
    return Finish(phase2, iterations);
  }

  // Returns nullopt when the basis cannot be used (singular, wrong shape, dual
  // infeasible or the dual loop gave up).
  std::optional<LpResult> SolveWarm(const Basis& parent) {
    if (static_cast<int>(parent.basic.size()) != m_ ||
        static_cast<int>(parent.status.size()) != total_) {
      return std::nullopt;
    }
    if (!BoundsConsistent()) {
      LpResult result;
      result.status = LpStatus::kInfeasible;
      result.warm_started = true;
      return result;
    }
    width_ = total_;
    basic_ = parent.basic;
    status_ = parent.status;
    x_.assign(width_, 0.0);
    if (!Factorize()) return std::nullopt;
    for (int j = 0; j < total_; ++j) {
      if (status_[j] != VarStatus::kBasic) PlaceAtBound(j, status_[j]);
    }
    RecomputeBasics();
    cost_.assign(width_, 0.0);
    for (int j = 0; j < n_; ++j) cost_[j] = lp_.cost[j];
    ComputeReducedCosts();
    const double dual_tol = 1e-7;
    for (int j = 0; j < width_; ++j) {
      if (status_[j] == VarStatus::kBasic || lo_[j] == hi_[j]) continue;
      if (CanIncrease(j) && d_[j] < -dual_tol) return std::nullopt;
      if (CanDecrease(j) && d_[j] > dual_tol) return std::nullopt;
    }
    int iterations = 0;
    const LpStatus dual = Dual(iterations);
    if (dual == LpStatus::kStalled) return std::nullopt;
    if (dual == LpStatus::kInfeasible) {
      LpResult result;
      result.status = LpStatus::kInfeasible;
      result.iterations = iterations;
      result.warm_started = true;
      return result;
    }
    const LpStatus primal = Primal(iterations);
    if (primal == LpStatus::kStalled) return std::nullopt;
    LpResult result = Finish(primal, iterations);
    result.warm_started = true;
    return result;
  }

 private:
  double& At(int row, int col) { return tab_[static_cast<std::size_t>(row) * width_ + col]; }
  double At(int row, int col) const {
    return tab_[static_cast<std::size_t>(row) * width_ + col];
  }

  bool CanIncrease(int j) const {
    return status_[j] == VarStatus::kAtLower || status_[j] == VarStatus::kFree;
  }
  bool CanDecrease(int j) const {
    return status_[j] == VarStatus::kAtUpper || status_[j] == VarStatus::kFree;
  }

  // Puts nonbasic j at the bound named by `preferred`, or at whichever bound
  // is finite, or at 0 when free.
  void PlaceAtBound(int j, VarStatus preferred) {
    const bool lo_ok = std::isfinite(lo_[j]);
    const bool hi_ok = std::isfinite(hi_[j]);
    if (preferred == VarStatus::kAtUpper && hi_ok) {
      status_[j] = VarStatus::kAtUpper;
      x_[j] = hi_[j];
    } else if (lo_ok) {
      status_[j] = VarStatus::kAtLower;
      x_[j] = lo_[j];
    } else if (hi_ok) {
      status_[j] = VarStatus::kAtUpper;
      x_[j] = hi_[j];
    } else {
      status_[j] = VarStatus::kFree;
      x_[j] = 0.0;
    }
  }

  // Builds tab_ = B^-1 [A | -I] for the columns in basic_ by Gauss-Jordan
  // elimination with partial pivoting.
  bool Factorize() {
    tab_.assign(static_cast<std::size_t>(m_) * width_, 0.0);
    for (int i = 0; i < m_; ++i) {
      for (const Term& t : lp_.rows[i]) At(i, t.index) = t.value;
      At(i, n_ + i) = -1.0;
    }
    std::vector<int> row_of(m_, -1);
    std::vector<bool> used(m_, false);
    for (int k = 0; k < m_; ++k) {
      const int col = basic_[k];
      if (col < 0 || col >= total_) return false;
      int best = -1;
      double best_abs = 1e-9;
      for (int i = 0; i < m_; ++i) {
        if (!used[i] && std::abs(At(i, col)) > best_abs) {
          best_abs = std::abs(At(i, col));
          best = i;
        }
      }
      if (best < 0) return false;
      used[best] = true;
      row_of[k] = best;
      Eliminate(best, col);
    }
    // Reorder rows so that basic_[i] owns row i.
    std::vector<double> sorted(tab_.size());
    for (int k = 0; k < m_; ++k) {
      std::copy_n(tab_.begin() + static_cast<std::ptrdiff_t>(row_of[k]) * width_, width_,
                  sorted.begin() + static_cast<std::ptrdiff_t>(k) * width_);
    }
    tab_ = std::move(sorted);
    for (int j = 0; j < total_; ++j) {
      if (status_[j] == VarStatus::kBasic &&
          std::find(basic_.begin(), basic_.end(), j) == basic_.end()) {
        return false;
      }
    }
    for (int k = 0; k < m_; ++k) status_[basic_[k]] = VarStatus::kBasic;
    return true;
  }

  void Eliminate(int row, int col) {
    const double inv = 1.0 / At(row, col);
    double* pivot_row = &tab_[static_cast<std::size_t>(row) * width_];
    for (int c = 0; c < width_; ++c) pivot_row[c] *= inv;
    pivot_row[col] = 1.0;
    for (int i = 0; i < m_; ++i) {
      if (i == row) continue;
      double* r = &tab_[static_cast<std::size_t>(i) * width_];
      const double factor = r[col];
      if (factor == 0.0) continue;
      for (int c = 0; c < width_; ++c) r[c] -= factor * pivot_row[c];
      r[col] = 0.0;
    }
  }

  // x_B = -sum over nonbasic j of tab[:, j] x_j (every row has rhs 0).
  void RecomputeBasics() {
    for (int i = 0; i < m_; ++i) {
      double value = 0.0;
      const double* r = &tab_[static_cast<std::size_t>(i) * width_];
      for (int j = 0; j < width_; ++j) {
        if (status_[j] != VarStatus::kBasic && x_[j] != 0.0) value -= r[j] * x_[j];
      }
      x_[basic_[i]] = value;
    }
  }

  void ComputeReducedCosts() {
    d_.assign(cost_.begin(), cost_.end());
    for (int i = 0; i < m_; ++i) {
      const double cb = cost_[basic_[i]];
      if (cb == 0.0) continue;
      const double* r = &tab_[static_cast<std::size_t>(i) * width_];
      for (int j = 0; j < width_; ++j) d_[j] -= cb * r[j];
    }
    for (int i = 0; i < m_; ++i) d_[basic_[i]] = 0.0;
  }

  LpStatus Primal(int& iterations) {
    const int degenerate_limit = 2 * (n_ + m_);
    int degenerate_run = 0;
    const double opt_tol = options_.optimality_tolerance;
    const double piv_tol = options_.pivot_tolerance;
    while (true) {
      if (iterations >= max_iterations_) return LpStatus::kStalled;
      ComputeReducedCosts();
      const bool bland = degenerate_run >= degenerate_limit;
      int enter = -1;
      double enter_dir = 0.0;
      double best = 0.0;
      for (int j = 0; j < width_; ++j) {
        if (status_[j] == VarStatus::kBasic || lo_[j] == hi_[j]) continue;
        double dir = 0.0;
        if (CanIncrease(j) && d_[j] < -opt_tol) dir = 1.0;
        else if (CanDecrease(j) && d_[j] > opt_tol) dir = -1.0;
        if (dir == 0.0) continue;
        const double score = std::abs(d_[j]);
        if (enter < 0 || (!bland && score > best)) {
          enter = j;
          enter_dir = dir;
          best = score;
          if (bland) break;
        }
      }
      if (enter < 0) return LpStatus::kOptimal;

      // Ratio test over basic variables; the entering variable's own range
      // wins ties (bound flip, no pivot).
      int leave_row = -1;
      double leave_limit = kInf;
      double leave_abs = 0.0;
      for (int i = 0; i < m_; ++i) {
        const double alpha = At(i, enter);
        if (std::abs(alpha) <= piv_tol) continue;
        const double rate = -enter_dir * alpha;  // d x_B[i] / d step
        const int b = basic_[i];
        double limit;
        if (rate < 0.0) {
          if (!std::isfinite(lo_[b])) continue;
          limit = (x_[b] - lo_[b]) / -rate;
        } else {
          if (!std::isfinite(hi_[b])) continue;
          limit = (hi_[b] - x_[b]) / rate;
        }
        limit = std::max(limit, 0.0);
        bool take = leave_row < 0;
        if (!take) {
          const double tie = 1e-12 * std::max(1.0, leave_limit);
          if (limit < leave_limit - tie) {
            take = true;
          } else if (limit <= leave_limit + tie) {
            // Bland: lowest basic index. Otherwise the larger pivot, then index.
            const double a = std::abs(alpha);
            take = bland ? b < basic_[leave_row]
                         : (a > leave_abs * (1.0 + 1e-9) ||
                            (a >= leave_abs * (1.0 - 1e-9) && b < basic_[leave_row]));
          }
        }
        if (take) {
          leave_row = i;
          leave_limit = limit;
          leave_abs = std::abs(alpha);
        }
      }
      const double flip = hi_[enter] - lo_[enter];
      if (leave_row >= 0 && flip <= leave_limit) leave_row = -1;
      const double step = leave_row >= 0 ? leave_limit : flip;
      if (!std::isfinite(step)) return LpStatus::kUnbounded;
      ++iterations;
      degenerate_run = step <= 1e-12 ? degenerate_run + 1 : 0;

      if (leave_row < 0) {
        // Entering variable moves to its opposite bound.
        status_[enter] = enter_dir > 0 ? VarStatus::kAtUpper : VarStatus::kAtLower;
        x_[enter] = enter_dir > 0 ? hi_[enter] : lo_[enter];
        RecomputeBasics();
        continue;
      }
      const int leave = basic_[leave_row];
      const double rate = -enter_dir * At(leave_row, enter);
      x_[leave] = rate < 0.0 ? lo_[leave] : hi_[leave];
      status_[leave] = rate < 0.0 ? VarStatus::kAtLower : VarStatus::kAtUpper;
      x_[enter] += enter_dir * step;
      Eliminate(leave_row, enter);
      basic_[leave_row] = enter;
      status_[enter] = VarStatus::kBasic;
      RecomputeBasics();
    }
  }

  LpStatus Dual(int& iterations) {
    const double feas_tol = options_.feasibility_tolerance * 1e-2;
    const double piv_tol = options_.pivot_tolerance;
    while (true) {
      if (iterations >= max_iterations_) return LpStatus::kStalled;
      int row = -1;
      double worst = feas_tol;
      for (int i = 0; i < m_; ++i) {
        const int b = basic_[i];
        const double violation = std::max(lo_[b] - x_[b], x_[b] - hi_[b]);
        if (violation > worst ||
            (row >= 0 && violation == worst && b < basic_[row])) {
          worst = violation;
          row = i;
        }
      }
      if (row < 0) return LpStatus::kOptimal;
      const int leave = basic_[row];
      const bool below = x_[leave] < lo_[leave];
      // x_B[row] changes by -alpha_j * delta_j.
      int enter = -1;
      double best_ratio = kInf;
      double best_abs = 0.0;
      for (int j = 0; j < width_; ++j) {
        if (status_[j] == VarStatus::kBasic || lo_[j] == hi_[j]) continue;
        const double alpha = At(row, j);
        if (std::abs(alpha) <= piv_tol) continue;
        const bool helps = below ? ((CanIncrease(j) && alpha < 0.0) ||
                                    (CanDecrease(j) && alpha > 0.0))
                                 : ((CanIncrease(j) && alpha > 0.0) ||
                                    (CanDecrease(j) && alpha < 0.0));
        if (!helps) continue;
        const double ratio = std::abs(d_[j]) / std::abs(alpha);
        if (ratio < best_ratio - 1e-12 ||
            (ratio <= best_ratio + 1e-12 && std::abs(alpha) > best_abs)) {
          best_ratio = ratio;
          best_abs = std::abs(alpha);
          enter = j;
        }
      }
      if (enter < 0) return LpStatus::kInfeasible;
      ++iterations;
      x_[leave] = below ? lo_[leave] : hi_[leave];
      status_[leave] = below ? VarStatus::kAtLower : VarStatus::kAtUpper;
      Eliminate(row, enter);
      basic_[row] = enter;
      status_[enter] = VarStatus::kBasic;
      RecomputeBasics();
      ComputeReducedCosts();
    }
  }

  // Pivots zero-valued basic artificials out where possible; the rest sit on
  // redundant rows. All artificials are then fixed at zero.
  void DriveOutArtificials() {
    for (int i = 0; i < m_; ++i) {
      if (basic_[i] < total_) continue;
      int best = -1;
      double best_abs = options_.pivot_tolerance;
      for (int j = 0; j < total_; ++j) {
        if (status_[j] == VarStatus::kBasic) continue;
        if (std::abs(At(i, j)) > best_abs + 1e-12) {
          best_abs = std::abs(At(i, j));
          best = j;
        }
      }
      if (best < 0) continue;
      const int art = basic_[i];
      Eliminate(i, best);
      basic_[i] = best;
      status_[best] = VarStatus::kBasic;
      status_[art] = VarStatus::kAtLower;
      x_[art] = 0.0;
    }
    for (int j = total_; j < width_; ++j) {
      lo_[j] = 0.0;
      hi_[j] = 0.0;
      if (status_[j] != VarStatus::kBasic) x_[j] = 0.0;
    }
    RecomputeBasics();
  }

  LpResult Finish(LpStatus status, int iterations) {
    LpResult result;
    result.status = status;
    result.iterations = iterations;
    if (status != LpStatus::kOptimal) return result;
    result.primal.assign(x_.begin(), x_.begin() + n_);
    result.objective = 0.0;
    for (int j = 0; j < n_; ++j) result.objective += lp_.cost[j] * result.primal[j];

    // y_i = c_B^T B^-1 e_i; the slack column of row i is -e_i so
    // B^-1 e_i = -tab[:, n + i].
    result.duals.assign(m_, 0.0);
    for (int i = 0; i < m_; ++i) {
      double y = 0.0;
      for (int k = 0; k < m_; ++k) {
        const int b = basic_[k];
        const double cb = b < n_ ? lp_.cost[b] : 0.0;
        y -= cb * At(k, n_ + i);
      }
      result.duals[i] = y;
    }
    // Reduced costs from the original data, then the dual objective
    // sum_j (d_j^+ lower_j - d_j^- upper_j).
    std::vector<double> reduced(total_, 0.0);
    for (int j = 0; j < n_; ++j) reduced[j] = lp_.cost[j];
    for (int i = 0; i < m_; ++i) {
      for (const Term& t : lp_.rows[i]) reduced[t.index] -= result.duals[i] * t.value;
      reduced[n_ + i] = result.duals[i];
    }
    const double tol = 1e-7;
    result.dual_feasible = true;
    double dual_objective = 0.0;
    for (int j = 0; j < total_; ++j) {
      const double dj = reduced[j];
      if (std::abs(dj) <= tol) {
        dual_objective += dj * x_[j];
      } else if (dj > 0.0) {
        if (!std::isfinite(lo_[j])) result.dual_feasible = false;
        else dual_objective += dj * lo_[j];
      } else {
        if (!std::isfinite(hi_[j])) result.dual_feasible = false;
        else dual_objective += dj * hi_[j];
      }
    }
    result.dual_objective = dual_objective;

    auto basis = std::make_shared<Basis>();
    basis->status.assign(status_.begin(), status_.begin() + total_);
    basis->basic = basic_;
    bool clean = true;
    for (int b : basic_) clean = clean && b < total_;
    if (clean) result.basis = std::move(basis);
    return result;
  }

  const LpProblem& lp_;
  SimplexOptions options_;
  int n_;
  int m_;
  int total_;
  int width_ = 0;
  int max_iterations_ = 0;
  std::vector<double> lo_;
  std::vector<double> hi_;
  std::vector<double> x_;
  std::vector<double> cost_;
  std::vector<double> d_;
  std::vector<VarStatus> status_;
  std::vector<int> basic_;
  std::vector<double> tab_;
};

}  // namespace simplex_internal

inline LpResult SolveLp(const LpProblem& lp, std::span<const double> col_lower,
                        std::span<const double> col_upper,
                        const SimplexOptions& options = {}) {
  Expects(static_cast<int>(col_lower.size()) == lp.num_cols &&
              static_cast<int>(col_upper.size()) == lp.num_cols,
          "column bound vectors must match the LP width");
  simplex_internal::Tableau tableau(lp, col_lower, col_upper, options);
  return tableau.SolveCold();
}

inline LpResult SolveLp(const LpProblem& lp, const SimplexOptions& options = {}) {
  return SolveLp(lp, lp.col_lower, lp.col_upper, options);
}

// Reoptimizes from a parent's optimal basis after column bound changes. The
// result contract is the same as SolveLp; a singular or unusable basis falls
// back to a cold solve.
inline LpResult WarmStartLp(const LpProblem& lp, const Basis& parent,
                            std::span<const double> col_lower,
                            std::span<const double> col_upper,
                            const SimplexOptions& options = {}) {
  Expects(static_cast<int>(col_lower.size()) == lp.num_cols &&
              static_cast<int>(col_upper.size()) == lp.num_cols,
          "column bound vectors must match the LP width");
  {
    simplex_internal::Tableau tableau(lp, col_lower, col_upper, options);
    if (auto warm = tableau.SolveWarm(parent)) return *std::move(warm);
  }
  return SolveLp(lp, col_lower, col_upper, options);
}

}  // namespace diversitree

#endif  // DIVERSITREE_SIMPLEX_HPP_
