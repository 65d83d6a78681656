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

#ifndef DIVERSITREE_ENGINE_HPP_
#define DIVERSITREE_ENGINE_HPP_

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "diversitree/error.hpp"
#include "diversitree/model.hpp"
#include "diversitree/node.hpp"
#include "diversitree/pool.hpp"
#include "diversitree/relaxation.hpp"
#include "diversitree/selectors.hpp"
#include "diversitree/simplex.hpp"

namespace diversitree {

enum class NodeClass { kInfeasible, kUnrestricted, kIntegerFeasible, kBranchable };

inline std::string_view NodeClassName(NodeClass c) {
  switch (c) {
    case NodeClass::kInfeasible:
      return "infeasible";
    case NodeClass::kUnrestricted:
      return "unrestricted";
    case NodeClass::kIntegerFeasible:
      return "integerFeasible";
    case NodeClass::kBranchable:
      return "branchable";
  }
  return "unknown";
}

// Worst-case activity of every row over the box is inside the row's range.
// Continuous variables take part through their local bounds.
inline bool AllRowsRedundant(const MipInstance& instance, const LocalBounds& bounds,
                             double tol = 1e-6) {
  for (const LinearConstraint& con : instance.constraints) {
    double lo = 0.0;
    double hi = 0.0;
    for (const Term& t : con.terms) {
      const double l = bounds.lower[t.index];
      const double u = bounds.upper[t.index];
      if (t.value > 0) {
        lo += t.value * l;
        hi += t.value * u;
      } else {
        lo += t.value * u;
        hi += t.value * l;
      }
    }
    if (lo < con.RowLower() - tol || hi > con.RowUpper() + tol) return false;
  }
  return true;
}

// Number of integer assignments in the local box, or nullopt when some free
// integer has an infinite range.
inline std::optional<double> FreeAssignmentCount(const MipInstance& instance,
                                                 const LocalBounds& bounds) {
  double count = 1.0;
  for (int j = 0; j < instance.num_variables(); ++j) {
    if (!instance.variables[j].is_integer) continue;
    const double lo = std::ceil(bounds.lower[j] - 1e-9);
    const double hi = std::floor(bounds.upper[j] + 1e-9);
    if (!std::isfinite(lo) || !std::isfinite(hi)) return std::nullopt;
    if (hi < lo) return 0.0;
    count *= hi - lo + 1.0;
  }
  return count;
}

inline NodeClass ClassifyNode(const Node& node, const MipInstance& instance,
                              double feas_tol = 1e-6) {
  if (node.lp_status == LpStatus::kInfeasible) return NodeClass::kInfeasible;
  if (FreeAssignmentCount(instance, node.bounds).has_value() &&
      AllRowsRedundant(instance, node.bounds, feas_tol)) {
    return NodeClass::kUnrestricted;
  }
  if (node.fractional_vars.empty()) return NodeClass::kIntegerFeasible;
  return NodeClass::kBranchable;
}

// Most fractional integer variable, lowest index on ties; -1 when none.
inline int MostFractional(const std::vector<int>& fractional, const std::vector<double>& primal) {
  int best = -1;
  double best_dist = 0.0;
  for (int j : fractional) {
    const double f = primal[j] - std::floor(primal[j]);
    const double dist = std::abs(f - 0.5);
    if (best == -1 || dist < best_dist - 1e-12 || (dist <= best_dist + 1e-12 && j < best)) {
      best = j;
      best_dist = dist;
    }
  }
  return best;
}

struct BranchDecision {
  int variable = -1;
  double down_upper = 0.0;  // child one: x_j <= down_upper
  double up_lower = 0.0;    // child two: x_j >= up_lower
};

// Split on the most fractional variable of the node LP.
inline BranchDecision ChooseFractionalBranch(const Node& node) {
  Expects(!node.fractional_vars.empty(), "branch called on a node without fractional variables");
  const int j = MostFractional(node.fractional_vars, node.lp_primal);
  const double v = node.lp_primal[j];
  return {j, std::floor(v), std::ceil(v)};
}

// Split of an integral LP point on the lowest-index integer that is not fixed.
inline std::optional<BranchDecision> ChooseIntegralBranch(const Node& node,
                                                          const MipInstance& instance) {
  for (int j = 0; j < instance.num_variables(); ++j) {
    if (!instance.variables[j].is_integer || node.bounds.IsFixed(j)) continue;
    const double v = std::round(node.lp_primal[j]);
    if (v < node.bounds.upper[j]) return BranchDecision{j, v, v + 1.0};
    return BranchDecision{j, v - 1.0, v};
  }
  return std::nullopt;
}

struct TraceRecord {
  NodeId id = 0;
  int depth = 0;
  double lp_bound = 0.0;
  NodeClass classification = NodeClass::kBranchable;
  std::size_t pool_size = 0;  // after processing the node
  double scaled_bound = 0.0;
  double diversity = 0.0;
  double scaled_depth = 0.0;
  bool blended = false;
};

// FNV-1a over the (id, depth, class) sequence.
class TraceHasher {
 public:
  void Add(const TraceRecord& r) {
    Mix(static_cast<std::uint64_t>(r.id));
    Mix(static_cast<std::uint64_t>(r.depth));
    Mix(static_cast<std::uint64_t>(r.classification));
  }
  std::uint64_t value() const { return hash_; }

 private:
  void Mix(std::uint64_t v) {
    for (int k = 0; k < 8; ++k) {
      hash_ ^= (v >> (8 * k)) & 0xffu;
      hash_ *= 0x100000001b3ull;
    }
  }
  std::uint64_t hash_ = 0xcbf29ce484222325ull;
};

struct EngineLimits {
  std::size_t p1 = kUnlimited;
  std::int64_t node_limit = 0;      // 0 = none
  double time_limit_seconds = 0.0;  // 0 = none
};

struct EngineOptions {
  RelaxationOptions relaxation;
  double feasibility_tolerance = 1e-6;
  bool dedup = true;
  bool keep_trace = true;
  // Called before each dequeue with the queue, the context and the pick.
  std::function<void(const OpenNodeQueue&, const ScoreContext&, const Selection&)> on_select;
};

struct CountResult {
  SolutionPool pool;
  std::int64_t nodes_processed = 0;
  std::int64_t nodes_created = 0;
  std::int64_t nodes_pruned = 0;  // children whose LP was infeasible
  std::int64_t unrestricted_subtrees = 0;
  std::int64_t nodes_abandoned = 0;  // LP stalled twice
  std::int64_t completions_resolved = 0;
  std::int64_t completions_dropped = 0;
  bool exhausted = false;
  bool truncated = false;
  double wall_time_seconds = 0.0;
  std::vector<TraceRecord> trace;
  std::uint64_t trace_hash = 0;
};

// Outcome of enumerating an unrestricted node.
struct EnumerationOutcome {
  std::size_t added = 0;
  bool complete = true;  // false when the budget ran out first
  std::int64_t resolved = 0;
  std::int64_t dropped = 0;
};

// Walks the free integer assignments of an unrestricted node in lexicographic
// order (ascending index, last variable fastest, low values first) and appends
// each completed solution until `budget` solutions were added.
inline EnumerationOutcome EnumerateUnrestricted(const Node& node, const MipInstance& instance,
                                                SolutionPool& pool, std::size_t budget,
                                                const RelaxationOptions& relaxation = {},
                                                double feas_tol = 1e-6) {
  EnumerationOutcome out;
  std::vector<int> free_vars;
  std::vector<double> x = node.lp_primal;
  if (x.empty()) x.assign(instance.num_variables(), 0.0);
  bool has_continuous = false;
  for (int j = 0; j < instance.num_variables(); ++j) {
    if (!instance.variables[j].is_integer) {
      has_continuous = true;
      continue;
    }
    const double lo = std::ceil(node.bounds.lower[j] - 1e-9);
    const double hi = std::floor(node.bounds.upper[j] + 1e-9);
    Expects(std::isfinite(lo) && std::isfinite(hi), "enumeration needs a finite integer box");
    if (hi < lo) return out;
    x[j] = lo;
    if (hi > lo) free_vars.push_back(j);
  }
  std::optional<LpProblem> completion_lp;
  for (;;) {
    if (out.added >= budget || pool.full()) {
      out.complete = false;
      return out;
    }
    Solution sol{x, 0.0};
    bool ok = instance.IsFeasible(sol.values, feas_tol);
    if (!ok && has_continuous) {
      // The node's continuous values do not fit this assignment; re-solve.
      if (!completion_lp) completion_lp = BuildLp(instance);
      LocalBounds fixed = node.bounds;
      for (int j = 0; j < instance.num_variables(); ++j) {
        if (instance.variables[j].is_integer) fixed.lower[j] = fixed.upper[j] = x[j];
      }
      const LpResult r = SolveLp(*completion_lp, fixed.lower, fixed.upper, relaxation.simplex);
      if (r.status == LpStatus::kOptimal) {
        sol.values = r.primal;
        for (int j = 0; j < instance.num_variables(); ++j) {
          if (instance.variables[j].is_integer) sol.values[j] = x[j];
        }
        ok = true;
        ++out.resolved;
      }
    }
    if (ok) {
      sol.objective = instance.Objective(sol.values);
      if (pool.Add(std::move(sol))) ++out.added;
    } else {
      ++out.dropped;
    }
    // Odometer step.
    int k = static_cast<int>(free_vars.size()) - 1;
    for (; k >= 0; --k) {
      const int j = free_vars[k];
      if (x[j] + 1.0 <= std::floor(node.bounds.upper[j] + 1e-9)) {
        x[j] += 1.0;
        break;
      }
      x[j] = std::ceil(node.bounds.lower[j] - 1e-9);
    }
    if (k < 0) return out;
  }
}

// Solves the node LP, warm from the parent basis when there is one, and fills
// in every LP-derived field of the node.
inline void EvaluateNode(Node& node, const MipInstance& instance, const LpProblem& lp,
                         const std::shared_ptr<const Basis>& parent_basis,
                         const RelaxationOptions& options) {
  LpResult r = parent_basis ? WarmStartFromParent(instance, lp, *parent_basis, node.bounds, options)
                            : SolveRelaxation(instance, lp, node.bounds, options);
  if (r.status == LpStatus::kStalled && parent_basis) {
    r = SolveRelaxation(instance, lp, node.bounds, options);
  }
  node.lp_status = r.status;
  node.lp_bound = r.objective;
  node.basis = r.basis;
  node.fractional_vars = r.fractional_vars;
  node.lp_primal = std::move(r.primal);
  node.estimate = node.lp_bound;
  if (r.status == LpStatus::kOptimal) {
    for (int j : node.fractional_vars) {
      const double f = node.lp_primal[j] - std::floor(node.lp_primal[j]);
      node.estimate += std::min(f, 1.0 - f) * std::abs(instance.objective[j]);
    }
  }
}

inline Node MakeChild(const Node& parent, NodeId id, int var, double lower, double upper,
                      const std::vector<int>& binary_indices) {
  Node child;
  child.id = id;
  child.parent_id = parent.id;
  child.depth = parent.depth + 1;
  child.bounds = parent.bounds;
  child.bounds.lower[var] = lower;
  child.bounds.upper[var] = upper;
  child.fixed_binaries = FixedBinariesOf(child.bounds, binary_indices);
  return child;
}

// Branch-and-count over an instance that already carries its cutoff row.
class BranchAndCount {
 public:
  BranchAndCount(const MipInstance& instance, const SelectorConfig& selector,
                 const EngineLimits& limits, EngineOptions options = {})
      : instance_(instance),
        lp_(BuildLp(instance)),
        binaries_(instance.BinaryIndices()),
        selector_(selector.Resolved(static_cast<int>(instance.IntegerIndices().size()))),
        limits_(limits),
        options_(std::move(options)) {}

  CountResult Run() {
    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
      return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };
    CountResult result;
    result.pool = SolutionPool(binaries_, limits_.p1, options_.dedup);
    TraceHasher hasher;
    OpenNodeQueue queue;
    NodeId next_id = 0;

    Node root;
    root.id = next_id++;
    root.bounds = LocalBounds::FromInstance(instance_);
    root.fixed_binaries = FixedBinariesOf(root.bounds, binaries_);
    EvaluateNode(root, instance_, lp_, nullptr, options_.relaxation);
    ++result.nodes_created;
    Admit(std::move(root), queue, result);

    bool enumeration_cut = false;
    while (!queue.empty() && !result.pool.full()) {
      if ((limits_.node_limit > 0 && result.nodes_processed >= limits_.node_limit) ||
          (limits_.time_limit_seconds > 0 && elapsed() >= limits_.time_limit_seconds)) {
        result.truncated = true;
        break;
      }
      ScoreContext ctx{queue.min_bound(), queue.max_bound(), &result.pool, result.pool.size(),
                       limits_.p1};
      const Selection pick = selector_.Select(queue, ctx);
      if (options_.on_select) options_.on_select(queue, ctx, pick);
      Node node = queue.Pop(pick.id);
      selector_.OnDequeued(node);
      ++result.nodes_processed;

      const NodeClass cls = ClassifyNode(node, instance_, options_.feasibility_tolerance);
      switch (cls) {
        case NodeClass::kInfeasible:
          break;
        case NodeClass::kUnrestricted: {
          ++result.unrestricted_subtrees;
          const std::size_t room = limits_.p1 == kUnlimited ? kUnlimited
                                                            : limits_.p1 - result.pool.size();
          const EnumerationOutcome e =
              EnumerateUnrestricted(node, instance_, result.pool, room, options_.relaxation,
                                    options_.feasibility_tolerance);
          result.completions_resolved += e.resolved;
          result.completions_dropped += e.dropped;
          if (!e.complete) enumeration_cut = true;
          break;
        }
        case NodeClass::kIntegerFeasible: {
          const auto split = ChooseIntegralBranch(node, instance_);
          if (split) {
            Split(node, *split, next_id, queue, result);
          } else {
            // Every integer is fixed; the LP point is the only solution here.
            Solution sol{node.lp_primal, 0.0};
            for (int j : instance_.IntegerIndices()) sol.values[j] = std::round(sol.values[j]);
            sol.objective = instance_.Objective(sol.values);
            result.pool.Add(std::move(sol));
          }
          break;
        }
        case NodeClass::kBranchable:
          Split(node, ChooseFractionalBranch(node), next_id, queue, result);
          break;
      }

      TraceRecord rec{node.id,           node.depth,     node.lp_bound,
                      cls,               result.pool.size(), pick.scaled_bound,
                      pick.diversity,    pick.scaled_depth,  pick.blended};
      hasher.Add(rec);
      if (options_.keep_trace) result.trace.push_back(rec);
    }
    result.exhausted = queue.empty() && !enumeration_cut && !result.truncated;
    result.trace_hash = hasher.value();
    result.wall_time_seconds = elapsed();
    return result;
  }

  const NodeSelector& selector() const { return selector_; }

 private:
  void Admit(Node node, OpenNodeQueue& queue, CountResult& result) {
    switch (node.lp_status) {
      case LpStatus::kInfeasible:
        ++result.nodes_pruned;
        return;
      case LpStatus::kStalled:
        ++result.nodes_abandoned;
        return;
      case LpStatus::kUnbounded:
        throw ModelError("LP relaxation is unbounded inside branch-and-count");
      case LpStatus::kOptimal:
        break;
    }
    selector_.OnCreated(node);
    queue.Push(std::move(node));
  }

  void Split(const Node& node, const BranchDecision& b, NodeId& next_id, OpenNodeQueue& queue,
             CountResult& result) {
    const int j = b.variable;
    Node down = MakeChild(node, next_id++, j, node.bounds.lower[j], b.down_upper, binaries_);
    Node up = MakeChild(node, next_id++, j, b.up_lower, node.bounds.upper[j], binaries_);
    EvaluateNode(down, instance_, lp_, node.basis, options_.relaxation);
    EvaluateNode(up, instance_, lp_, node.basis, options_.relaxation);
    result.nodes_created += 2;
    Admit(std::move(down), queue, result);
    Admit(std::move(up), queue, result);
  }

  const MipInstance& instance_;
  LpProblem lp_;
  std::vector<int> binaries_;
  NodeSelector selector_;
  EngineLimits limits_;
  EngineOptions options_;
};

inline CountResult RunBranchAndCount(const MipInstance& instance, const SelectorConfig& selector,
                                     const EngineLimits& limits, EngineOptions options = {}) {
  return BranchAndCount(instance, selector, limits, std::move(options)).Run();
}

// ---------------------------------------------------------------------------
// Plain branch-and-bound for z*
// ---------------------------------------------------------------------------

enum class OptimumStatus { kOptimal, kInfeasible, kUnbounded, kLimit };

inline std::string_view OptimumStatusName(OptimumStatus s) {
  switch (s) {
    case OptimumStatus::kOptimal:
      return "optimal";
    case OptimumStatus::kInfeasible:
      return "infeasible";
    case OptimumStatus::kUnbounded:
      return "unbounded";
    case OptimumStatus::kLimit:
      return "limit";
  }
  return "unknown";
}

struct OptimumResult {
  OptimumStatus status = OptimumStatus::kInfeasible;
  double z_star = 0.0;  // minimization sense
  std::vector<double> solution;
  std::int64_t nodes_processed = 0;
  std::int64_t nodes_abandoned = 0;
  double wall_time_seconds = 0.0;
};

// Best-first branch-and-bound with incumbent pruning.
inline OptimumResult SolveOptimum(const MipInstance& instance, const EngineLimits& limits = {},
                                  const RelaxationOptions& options = {}) {
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  };
  OptimumResult result;
  const LpProblem lp = BuildLp(instance);
  const std::vector<int> binaries = instance.BinaryIndices();
  const std::vector<int> integers = instance.IntegerIndices();
  const NodeSelector best_first(SelectorConfig{}.Resolved(1));

  OpenNodeQueue queue;
  NodeId next_id = 0;
  Node root;
  root.id = next_id++;
  root.bounds = LocalBounds::FromInstance(instance);
  EvaluateNode(root, instance, lp, nullptr, options);
  if (root.lp_status == LpStatus::kUnbounded) {
    result.status = OptimumStatus::kUnbounded;
    return result;
  }
  double incumbent = kInf;
  auto prunable = [&](double bound) {
    return bound >= incumbent - 1e-9 * std::max(1.0, std::abs(incumbent));
  };
  auto admit = [&](Node n) {
    if (n.lp_status == LpStatus::kStalled) ++result.nodes_abandoned;
    if (n.lp_status != LpStatus::kOptimal) return;
    if (prunable(n.lp_bound)) return;
    queue.Push(std::move(n));
  };
  admit(std::move(root));
  bool hit_limit = false;
  while (!queue.empty()) {
    if ((limits.node_limit > 0 && result.nodes_processed >= limits.node_limit) ||
        (limits.time_limit_seconds > 0 && elapsed() >= limits.time_limit_seconds)) {
      hit_limit = true;
      break;
    }
    const Selection pick = best_first.Select(queue, {});
    Node node = queue.Pop(pick.id);
    ++result.nodes_processed;
    if (prunable(node.lp_bound)) continue;
    if (node.fractional_vars.empty()) {
      std::vector<double> x = node.lp_primal;
      for (int j : integers) x[j] = std::round(x[j]);
      const double value = instance.Objective(x);
      if (value < incumbent) {
        incumbent = value;
        result.solution = std::move(x);
      }
      continue;
    }
    const BranchDecision b = ChooseFractionalBranch(node);
    const int j = b.variable;
    Node down = MakeChild(node, next_id++, j, node.bounds.lower[j], b.down_upper, binaries);
    Node up = MakeChild(node, next_id++, j, b.up_lower, node.bounds.upper[j], binaries);
    EvaluateNode(down, instance, lp, node.basis, options);
    EvaluateNode(up, instance, lp, node.basis, options);
    if (down.lp_status == LpStatus::kUnbounded || up.lp_status == LpStatus::kUnbounded) {
      result.status = OptimumStatus::kUnbounded;
      return result;
    }
    admit(std::move(down));
    admit(std::move(up));
  }
  result.wall_time_seconds = elapsed();
  if (hit_limit) {
    result.status = OptimumStatus::kLimit;
    result.z_star = incumbent;
  } else if (std::isfinite(incumbent)) {
    result.status = OptimumStatus::kOptimal;
    result.z_star = incumbent;
  } else {
    result.status = OptimumStatus::kInfeasible;
  }
  return result;
}

}  // namespace diversitree

#endif  // DIVERSITREE_ENGINE_HPP_
