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

// Mixed-integer instances and the model transforms applied before search:
//
//   min  c^T x
//   s.t. row_lower <= A x <= row_upper
//        lower <= x <= upper,  x_j integral for j in I.
//
// Objectives are always stored in minimization form. Maximization inputs are
// negated at ingestion and `maximize` is set so that reported objectives can
// be un-negated with ReportedObjective().

#ifndef DIVERSITREE_MODEL_HPP_
#define DIVERSITREE_MODEL_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diversitree/error.hpp"

namespace diversitree {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class RowSense { kGreaterEqual, kLessEqual, kEqual };

inline const char* RowSenseSymbol(RowSense sense) {
  switch (sense) {
    case RowSense::kGreaterEqual:
      return ">=";
    case RowSense::kLessEqual:
      return "<=";
    case RowSense::kEqual:
      return "=";
  }
  return "?";
}

struct VariableDef {
  std::string name;
  double lower = 0.0;
  double upper = kInf;
  bool is_integer = false;

  bool IsBinary() const { return is_integer && lower == 0.0 && upper == 1.0; }

  friend bool operator==(const VariableDef&, const VariableDef&) = default;
};

struct Term {
  int index = 0;
  double value = 0.0;

  friend bool operator==(const Term&, const Term&) = default;
};

struct LinearConstraint {
  std::string name;
  std::vector<Term> terms;  // sorted by index, no zeros, no duplicates
  RowSense sense = RowSense::kGreaterEqual;
  double rhs = 0.0;

  double RowLower() const {
    return sense == RowSense::kLessEqual ? -kInf : rhs;
  }
  double RowUpper() const {
    return sense == RowSense::kGreaterEqual ? kInf : rhs;
  }
  double Activity(std::span<const double> x) const {
    double activity = 0.0;
    for (const Term& t : terms) activity += t.value * x[t.index];
    return activity;
  }

  friend bool operator==(const LinearConstraint&,
                         const LinearConstraint&) = default;
};

// Sums duplicate indices, drops zero coefficients and sorts by index.
inline std::vector<Term> CanonicalTerms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.index < b.index; });
  std::vector<Term> out;
  for (const Term& t : terms) {
    if (!out.empty() && out.back().index == t.index) {
      out.back().value += t.value;
    } else {
      out.push_back(t);
    }
  }
  std::erase_if(out, [](const Term& t) { return t.value == 0.0; });
  return out;
}

inline LinearConstraint MakeConstraint(std::string name, std::vector<Term> terms,
                                       RowSense sense, double rhs) {
  return LinearConstraint{std::move(name), CanonicalTerms(std::move(terms)),
                          sense, rhs};
}

// A row in the internal ">=" convention: terms . x >= rhs.
struct NormalizedRow {
  std::vector<Term> terms;
  double rhs = 0.0;
  std::size_t source = 0;  // index of the originating LinearConstraint
};

struct MipInstance {
  std::string name;
  std::vector<VariableDef> variables;
  std::vector<LinearConstraint> constraints;
  std::vector<double> objective;  // dense, minimization sense
  bool maximize = false;          // original file asked to maximize
  std::optional<std::size_t> cutoff_row;

  int num_variables() const { return static_cast<int>(variables.size()); }
  int num_constraints() const { return static_cast<int>(constraints.size()); }

  // Ordered index set B.
  std::vector<int> BinaryIndices() const {
    std::vector<int> out;
    for (int j = 0; j < num_variables(); ++j) {
      if (variables[j].IsBinary()) out.push_back(j);
    }
    return out;
  }

  // Index set I (includes B).
  std::vector<int> IntegerIndices() const {
    std::vector<int> out;
    for (int j = 0; j < num_variables(); ++j) {
      if (variables[j].is_integer) out.push_back(j);
    }
    return out;
  }

  double Objective(std::span<const double> x) const {
    double value = 0.0;
    for (std::size_t j = 0; j < objective.size(); ++j) value += objective[j] * x[j];
    return value;
  }

  // Objective in the sense of the original file.
  double ReportedObjective(double internal) const {
    return maximize ? -internal : internal;
  }

  // Equality rows become two rows, <= rows are negated.
  std::vector<NormalizedRow> NormalizedRows() const {
    std::vector<NormalizedRow> rows;
    for (std::size_t i = 0; i < constraints.size(); ++i) {
      const LinearConstraint& con = constraints[i];
      if (con.sense != RowSense::kLessEqual) {
        rows.push_back({con.terms, con.rhs, i});
      }
      if (con.sense != RowSense::kGreaterEqual) {
        NormalizedRow row{con.terms, -con.rhs, i};
        for (Term& t : row.terms) t.value = -t.value;
        rows.push_back(std::move(row));
      }
    }
    return rows;
  }

  bool IsFeasible(std::span<const double> x, double tol) const {
    for (int j = 0; j < num_variables(); ++j) {
      const VariableDef& v = variables[j];
      if (x[j] < v.lower - tol || x[j] > v.upper + tol) return false;
      if (v.is_integer && std::abs(x[j] - std::round(x[j])) > tol) return false;
    }
    for (const LinearConstraint& con : constraints) {
      const double activity = con.Activity(x);
      if (activity < con.RowLower() - tol || activity > con.RowUpper() + tol) {
        return false;
      }
    }
    return true;
  }

  void Validate() const {
    const int d = num_variables();
    if (static_cast<int>(objective.size()) != d) {
      throw ModelError("objective has " + std::to_string(objective.size()) +
                       " entries for " + std::to_string(d) + " variables");
    }
    for (const VariableDef& v : variables) {
      if (std::isnan(v.lower) || std::isnan(v.upper) || v.lower > v.upper) {
        throw ModelError("variable '" + v.name + "' has inconsistent bounds");
      }
    }
    for (const LinearConstraint& con : constraints) {
      int previous = -1;
      for (const Term& t : con.terms) {
        if (t.index < 0 || t.index >= d) {
          throw ModelError("constraint '" + con.name +
                           "' references unknown variable " +
                           std::to_string(t.index));
        }
        if (t.index <= previous) {
          throw ModelError("constraint '" + con.name +
                           "' has unsorted or duplicate indices");
        }
        if (t.value == 0.0) {
          throw ModelError("constraint '" + con.name + "' stores a zero");
        }
        previous = t.index;
      }
    }
    if (cutoff_row && *cutoff_row >= constraints.size()) {
      throw ModelError("cutoff row index out of range");
    }
  }

  friend bool operator==(const MipInstance&, const MipInstance&) = default;
};

// ---------------------------------------------------------------------------
// Objective cutoff
// ---------------------------------------------------------------------------

// Relative gap on |z*|: z* + q|z*|. Equals (1+q) z* for z* >= 0 and keeps the
// "within q of optimal" meaning when z* < 0.
inline double CutoffValue(double z_star, double q) {
  Expects(q >= 0.0, "near-optimality fraction q must be nonnegative");
  if (z_star == 0.0) return 0.0;
  return z_star + q * std::abs(z_star);
}

struct CutoffSpec {
  double z_star = 0.0;
  double q = 0.0;
  double cutoff_value = 0.0;

  static CutoffSpec Make(double z_star, double q) {
    return CutoffSpec{z_star, q, CutoffValue(z_star, q)};
  }
};

inline constexpr const char* kCutoffRowName = "__objective_cutoff";

// Copy of `instance` with c^T x <= CutoffValue(z_star, q) appended. The
// objective is kept so node bounds can still be computed.
inline MipInstance AddObjectiveCutoff(const MipInstance& instance, double z_star,
                                      double q) {
  const double cutoff = CutoffValue(z_star, q);
  MipInstance out = instance;
  std::vector<Term> terms;
  for (int j = 0; j < instance.num_variables(); ++j) {
    if (instance.objective[j] != 0.0) terms.push_back({j, instance.objective[j]});
  }
  out.constraints.push_back(
      MakeConstraint(kCutoffRowName, std::move(terms), RowSense::kLessEqual, cutoff));
  out.cutoff_row = out.constraints.size() - 1;
  return out;
}

// ---------------------------------------------------------------------------
// Reformulations onto binaries
// ---------------------------------------------------------------------------

// Recovers original-space values from a reformulated solution. Each target is
// decoded as offset + scale * sum_k weights[k] * x[bits[k]].
struct IndexMap {
  struct Expansion {
    int original = 0;
    std::vector<int> bits;
    std::vector<double> weights;
    double offset = 0.0;
    double scale = 1.0;
  };

  int original_num_variables = 0;
  std::vector<Expansion> expansions;

  double DecodeTarget(const Expansion& e, std::span<const double> x) const {
    double sum = 0.0;
    for (std::size_t k = 0; k < e.bits.size(); ++k) sum += e.weights[k] * x[e.bits[k]];
    return e.offset + e.scale * sum;
  }

  std::vector<double> Decode(std::span<const double> x) const {
    std::vector<double> out(x.begin(), x.begin() + original_num_variables);
    for (const Expansion& e : expansions) out[e.original] = DecodeTarget(e, x);
    return out;
  }
};

// Smallest M >= 1 with u <= 2^M - 1.
inline int BinaryExpansionWidth(double upper) {
  int width = 1;
  while (std::ldexp(1.0, width) - 1.0 < upper) ++width;
  return width;
}

// Number of bits K = ceil(p log 10 / log 2) giving accuracy 10^-p on [0,1].
inline int DiscretizationWidth(int precision_digits) {
  Expects(precision_digits > 0, "precision digits must be positive");
  return static_cast<int>(
      std::ceil(std::log(10.0) / std::log(2.0) * precision_digits));
}

// Replaces each bounded nonnegative general integer x with bits b_0..b_{M-1},
// x = sum 2^j b_j. x stays in the model (as a continuous variable tied by the
// linking equality) so constraints need not be rewritten.
inline std::pair<MipInstance, IndexMap> BinaryExpand(const MipInstance& instance,
                                                     std::span<const int> targets) {
  MipInstance out = instance;
  IndexMap map;
  map.original_num_variables = instance.num_variables();
  for (int target : targets) {
    Expects(target >= 0 && target < instance.num_variables(),
            "binary expansion target out of range");
    const VariableDef& var = instance.variables[target];
    if (!var.is_integer) {
      throw ModelError("binary expansion target '" + var.name + "' is not integer");
    }
    if (!std::isfinite(var.upper)) {
      throw ModelError("binary expansion target '" + var.name + "' is unbounded");
    }
    if (var.lower < 0.0) {
      throw ModelError("binary expansion target '" + var.name +
                       "' has a negative lower bound");
    }
    IndexMap::Expansion expansion;
    expansion.original = target;
    if (var.IsBinary()) {
      expansion.bits = {target};
      expansion.weights = {1.0};
      map.expansions.push_back(std::move(expansion));
      continue;
    }
    const int width = BinaryExpansionWidth(var.upper);
    std::vector<Term> link{{target, 1.0}};
    std::vector<Term> sum;
    for (int j = 0; j < width; ++j) {
      const int bit = out.num_variables();
      out.variables.push_back({var.name + "#b" + std::to_string(j), 0.0, 1.0, true});
      out.objective.push_back(0.0);
      const double weight = std::ldexp(1.0, j);
      link.push_back({bit, -weight});
      sum.push_back({bit, weight});
      expansion.bits.push_back(bit);
      expansion.weights.push_back(weight);
    }
    out.variables[target].is_integer = false;
    out.constraints.push_back(
        MakeConstraint("link#" + var.name, std::move(link), RowSense::kEqual, 0.0));
    if (var.lower > 0.0) {
      out.constraints.push_back(
          MakeConstraint("lb#" + var.name, sum, RowSense::kGreaterEqual, var.lower));
    }
    out.constraints.push_back(
        MakeConstraint("ub#" + var.name, std::move(sum), RowSense::kLessEqual, var.upper));
    map.expansions.push_back(std::move(expansion));
  }
  return {std::move(out), std::move(map)};
}

// Maps each bounded continuous x in [l,u] onto K bits:
// x = l + (u-l) sum_{k=1..K} 2^-k z_k. A fixed x (l == u) uses scale 1 so all
// bits are forced to zero.
inline std::pair<MipInstance, IndexMap> DiscretizeContinuous(
    const MipInstance& instance, std::span<const int> targets, int precision_digits) {
  const int width = DiscretizationWidth(precision_digits);
  MipInstance out = instance;
  IndexMap map;
  map.original_num_variables = instance.num_variables();
  for (int target : targets) {
    Expects(target >= 0 && target < instance.num_variables(),
            "discretization target out of range");
    const VariableDef& var = instance.variables[target];
    if (var.is_integer) {
      throw ModelError("discretization target '" + var.name + "' is integer");
    }
    if (!std::isfinite(var.lower) || !std::isfinite(var.upper)) {
      throw ModelError("discretization target '" + var.name + "' is unbounded");
    }
    IndexMap::Expansion expansion;
    expansion.original = target;
    expansion.offset = var.lower;
    expansion.scale = var.upper > var.lower ? var.upper - var.lower : 1.0;
    std::vector<Term> link{{target, 1.0}};
    for (int k = 1; k <= width; ++k) {
      const int bit = out.num_variables();
      out.variables.push_back({var.name + "#z" + std::to_string(k), 0.0, 1.0, true});
      out.objective.push_back(0.0);
      const double weight = std::ldexp(1.0, -k);
      link.push_back({bit, -expansion.scale * weight});
      expansion.bits.push_back(bit);
      expansion.weights.push_back(weight);
    }
    out.constraints.push_back(MakeConstraint("disc#" + var.name, std::move(link),
                                             RowSense::kEqual, var.lower));
    map.expansions.push_back(std::move(expansion));
  }
  return {std::move(out), std::move(map)};
}

}  // namespace diversitree

#endif  // DIVERSITREE_MODEL_HPP_
