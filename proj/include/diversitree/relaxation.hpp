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

#ifndef DIVERSITREE_RELAXATION_HPP_
#define DIVERSITREE_RELAXATION_HPP_

#include <cmath>
#include <vector>

#include "diversitree/model.hpp"
#include "diversitree/simplex.hpp"

namespace diversitree {

// Per-variable bound overrides of a tree node.
struct LocalBounds {
  std::vector<double> lower;
  std::vector<double> upper;

  static LocalBounds FromInstance(const MipInstance& instance) {
    LocalBounds bounds;
    for (const VariableDef& v : instance.variables) {
      bounds.lower.push_back(v.lower);
      bounds.upper.push_back(v.upper);
    }
    return bounds;
  }

  bool IsFixed(int j) const { return lower[j] == upper[j]; }

  friend bool operator==(const LocalBounds&, const LocalBounds&) = default;
};

// LP relaxation of `instance` with integrality dropped.
inline LpProblem BuildLp(const MipInstance& instance) {
  LpProblem lp;
  lp.num_cols = instance.num_variables();
  lp.cost = instance.objective;
  for (const VariableDef& v : instance.variables) {
    lp.col_lower.push_back(v.lower);
    lp.col_upper.push_back(v.upper);
  }
  for (const LinearConstraint& con : instance.constraints) {
    lp.rows.push_back(con.terms);
    lp.row_lower.push_back(con.RowLower());
    lp.row_upper.push_back(con.RowUpper());
  }
  return lp;
}

// Integer variables whose value is more than `int_tol` from an integer.
inline std::vector<int> FractionalVars(const MipInstance& instance,
                                       const std::vector<double>& primal,
                                       double int_tol) {
  std::vector<int> out;
  for (int j = 0; j < instance.num_variables(); ++j) {
    if (!instance.variables[j].is_integer) continue;
    if (std::abs(primal[j] - std::round(primal[j])) > int_tol) out.push_back(j);
  }
  return out;
}

struct RelaxationOptions {
  SimplexOptions simplex;
  double integrality_tolerance = 1e-6;
};

inline LpResult SolveRelaxation(const MipInstance& instance, const LpProblem& lp,
                                const LocalBounds& bounds,
                                const RelaxationOptions& options = {}) {
  LpResult result = SolveLp(lp, bounds.lower, bounds.upper, options.simplex);
  if (result.status == LpStatus::kOptimal) {
    result.fractional_vars =
        FractionalVars(instance, result.primal, options.integrality_tolerance);
  }
  return result;
}

inline LpResult SolveRelaxation(const MipInstance& instance, const LocalBounds& bounds,
                                const RelaxationOptions& options = {}) {
  return SolveRelaxation(instance, BuildLp(instance), bounds, options);
}

inline LpResult WarmStartFromParent(const MipInstance& instance, const LpProblem& lp,
                                    const Basis& parent, const LocalBounds& child,
                                    const RelaxationOptions& options = {}) {
  LpResult result = WarmStartLp(lp, parent, child.lower, child.upper, options.simplex);
  if (result.status == LpStatus::kOptimal) {
    result.fractional_vars =
        FractionalVars(instance, result.primal, options.integrality_tolerance);
  }
  return result;
}

}  // namespace diversitree

#endif  // DIVERSITREE_RELAXATION_HPP_
