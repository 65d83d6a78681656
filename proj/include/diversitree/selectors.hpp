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

#ifndef DIVERSITREE_SELECTORS_HPP_
#define DIVERSITREE_SELECTORS_HPP_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "diversitree/error.hpp"
#include "diversitree/node.hpp"
#include "diversitree/pool.hpp"

namespace diversitree {

enum class Rule {
  kBestFirst,
  kDepthFirst,
  kBreadthFirst,
  kUct,
  kHybridEstimate,
  kDbfsAlpha,       // (1-a)L + a D
  kDbfsAlphaBeta,   // (1-a-b)L + a D + b H
  kDbfsAlphaS,      // L until ceil(s p1) solutions, then D-BFS(a)
  kDbfsAlphaD,      // L until depth d is reached, then D-BFS(a)
  kDiversiTree,     // L until ceil(s p1) solutions, then D-BFS(a,b)
  kDbfsMin,         // (1-a)L + a min(D,H), optionally gated by s
  kDbfsMax,
  kDbfsProduct,
};

struct RuleInfo {
  Rule rule;
  std::string_view name;
};

inline constexpr std::array<RuleInfo, 13> kRules = {{
    {Rule::kBestFirst, "bestfs"},
    {Rule::kDepthFirst, "dfs"},
    {Rule::kBreadthFirst, "brfs"},
    {Rule::kUct, "uct"},
    {Rule::kHybridEstimate, "he"},
    {Rule::kDbfsAlpha, "dbfs-a"},
    {Rule::kDbfsAlphaBeta, "dbfs-ab"},
    {Rule::kDbfsAlphaS, "dbfs-as"},
    {Rule::kDbfsAlphaD, "dbfs-ad"},
    {Rule::kDiversiTree, "diversitree"},
    {Rule::kDbfsMin, "dbfs-min"},
    {Rule::kDbfsMax, "dbfs-max"},
    {Rule::kDbfsProduct, "dbfs-prod"},
}};

inline std::string_view RuleName(Rule rule) {
  for (const auto& info : kRules) {
    if (info.rule == rule) return info.name;
  }
  return "unknown";
}

// Accepts the canonical names plus a few aliases ("bcbfs" is BestFS).
inline Rule ParseRule(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (const auto& info : kRules) {
    if (info.name == lower) return info.rule;
  }
  if (lower == "bcbfs" || lower == "bfs" || lower == "best") return Rule::kBestFirst;
  if (lower == "lifo") return Rule::kDepthFirst;
  if (lower == "fifo") return Rule::kBreadthFirst;
  throw ContractViolation("unknown node selection rule '" + std::string(text) + "'");
}

inline bool UsesScaledBound(Rule rule) {
  switch (rule) {
    case Rule::kBestFirst:
    case Rule::kDepthFirst:
    case Rule::kBreadthFirst:
    case Rule::kUct:
    case Rule::kHybridEstimate:
      return false;
    default:
      return true;
  }
}

inline bool UsesBeta(Rule rule) {
  return rule == Rule::kDbfsAlphaBeta || rule == Rule::kDiversiTree;
}

inline bool UsesDepth(Rule rule) {
  return UsesBeta(rule) || rule == Rule::kDbfsMin || rule == Rule::kDbfsMax ||
         rule == Rule::kDbfsProduct;
}

inline bool SolutionGated(Rule rule) {
  return rule == Rule::kDbfsAlphaS || rule == Rule::kDiversiTree || rule == Rule::kDbfsMin ||
         rule == Rule::kDbfsMax || rule == Rule::kDbfsProduct;
}

struct SelectorConfig {
  Rule rule = Rule::kBestFirst;
  double alpha = 0.0;
  double beta = 0.0;
  double solution_cutoff = 0.0;  // s, a fraction of p1
  int depth_cutoff = 0;          // d
  double rho = std::numeric_limits<double>::quiet_NaN();  // NaN picks the rule default
  int min_plunge_depth = 0;
  int max_plunge_depth = -1;  // -1 resolves to |I| at solve time
  bool literal_score = false;
  bool from_preset = false;  // table presets may put alpha + beta slightly above 1

  double EffectiveRho() const {
    if (!std::isnan(rho)) return rho;
    return rule == Rule::kUct ? 0.1 : 0.5;
  }

  // Plunge range with the automatic maximum filled in.
  SelectorConfig Resolved(int num_integer_vars) const {
    SelectorConfig out = *this;
    if (out.max_plunge_depth < 0) {
      out.max_plunge_depth = std::max(out.min_plunge_depth + 1, num_integer_vars);
    }
    return out;
  }

  void Validate() const {
    auto unit = [](double v) { return v >= 0.0 && v <= 1.0; };
    Expects(unit(alpha), "alpha must lie in [0,1]");
    Expects(unit(beta), "beta must lie in [0,1]");
    Expects(unit(solution_cutoff), "solution cutoff s must lie in [0,1]");
    Expects(depth_cutoff >= 0, "depth cutoff d must be nonnegative");
    Expects(std::isnan(rho) || rho >= 0.0, "rho must be nonnegative");
    if (UsesBeta(rule) && !from_preset) Expects(alpha + beta <= 1.0 + 1e-12, "alpha + beta must not exceed 1");
    Expects(max_plunge_depth < 0 || max_plunge_depth > min_plunge_depth,
            "max plunge depth must exceed min plunge depth");
  }
};

struct ScoreContext {
  double min_bound = 0.0;
  double max_bound = 0.0;
  const SolutionPool* pool = nullptr;
  std::size_t solutions_found = 0;
  std::size_t p1 = kUnlimited;
};

inline double ScaledBound(double lp_bound, const ScoreContext& ctx) {
  const double span = ctx.max_bound - ctx.min_bound;
  if (!(span > 0.0)) return 0.0;
  return std::clamp((lp_bound - ctx.min_bound) / span, 0.0, 1.0);
}

inline double ScaledBound(const Node& node, const ScoreContext& ctx) {
  return ScaledBound(node.lp_bound, ctx);
}

inline double ScaledDepth(int depth, const SelectorConfig& cfg) {
  Expects(cfg.max_plunge_depth > cfg.min_plunge_depth, "plunge depths not resolved");
  const double h = static_cast<double>(depth - cfg.min_plunge_depth) /
                   static_cast<double>(cfg.max_plunge_depth - cfg.min_plunge_depth);
  return std::clamp(h, 0.0, 1.0);
}

inline double ScaledDepth(const Node& node, const SelectorConfig& cfg) {
  return ScaledDepth(node.depth, cfg);
}

// Mean over the pool and the node's fixed binaries of |fixed_j - x_j|.
inline double PartialDiversity(const std::vector<FixedBinary>& fixed, const SolutionPool& pool) {
  if (pool.empty() || fixed.empty()) return 0.0;
  const auto n = static_cast<std::int64_t>(pool.size());
  std::int64_t mismatches = 0;
  for (const FixedBinary& f : fixed) {
    const std::int64_t ones = pool.ones(f.position);
    mismatches += f.value ? n - ones : ones;
  }
  return static_cast<double>(mismatches) / (static_cast<double>(n) * fixed.size());
}

inline double PartialDiversity(const Node& node, const SolutionPool& pool) {
  return PartialDiversity(node.fixed_binaries, pool);
}

// ceil(s * p1); with p1 unlimited only s = 0 opens the gate.
inline std::size_t SolutionThreshold(double s, std::size_t p1) {
  if (s <= 0.0) return 0;
  if (p1 == kUnlimited) return kUnlimited;
  return static_cast<std::size_t>(std::ceil(s * static_cast<double>(p1) - 1e-9));
}

// The node picked by a selector together with the terms it was scored on.
struct Selection {
  NodeId id = 0;
  double score = 0.0;
  double scaled_bound = 0.0;
  double diversity = 0.0;
  double scaled_depth = 0.0;
  bool blended = false;  // diversity terms were active
};

class NodeSelector {
 public:
  NodeSelector() = default;
  explicit NodeSelector(SelectorConfig config) : config_(config) {
    config_.Validate();
    Expects(config_.max_plunge_depth > config_.min_plunge_depth,
            "selector needs resolved plunge depths");
  }

  const SelectorConfig& config() const { return config_; }
  bool depth_gate_tripped() const { return depth_tripped_; }

  // True when the blended (diversity) score is in force for the next pick.
  bool Blending(const ScoreContext& ctx) const {
    if (config_.rule == Rule::kDbfsAlphaD) return depth_tripped_;
    if (SolutionGated(config_.rule)) {
      return ctx.solutions_found >= SolutionThreshold(config_.solution_cutoff, ctx.p1);
    }
    return UsesScaledBound(config_.rule);
  }

  // The blended score, in bonus form unless literal_score is set.
  double BlendedScore(double l, double d, double h) const {
    const double a = config_.alpha;
    const double b = config_.beta;
    const bool lit = config_.literal_score;
    auto bonus = [lit](double g) { return lit ? g : 1.0 - g; };
    switch (config_.rule) {
      case Rule::kDbfsAlpha:
      case Rule::kDbfsAlphaS:
      case Rule::kDbfsAlphaD:
        return (1.0 - a) * l + a * bonus(d);
      case Rule::kDbfsAlphaBeta:
      case Rule::kDiversiTree:
        return std::max(0.0, 1.0 - a - b) * l + a * bonus(d) + b * bonus(h);
      case Rule::kDbfsMin:
        return (1.0 - a) * l + a * bonus(std::min(d, h));
      case Rule::kDbfsMax:
        return (1.0 - a) * l + a * bonus(std::max(d, h));
      case Rule::kDbfsProduct:
        return (1.0 - a) * l + a * bonus(d * h);
      default:
        return l;
    }
  }

  Selection Select(const OpenNodeQueue& queue, const ScoreContext& ctx) const {
    Expects(!queue.empty(), "select from an empty queue");
    const auto& nodes = queue.nodes();
    switch (config_.rule) {
      case Rule::kDepthFirst:
        return Plain(nodes.rbegin()->second);
      case Rule::kBreadthFirst:
        return Plain(nodes.begin()->second);
      case Rule::kBestFirst:
        return ArgMin(nodes, [](const Node& n) { return n.lp_bound; });
      case Rule::kUct: {
        const double rho = config_.EffectiveRho();
        return ArgMin(nodes, [&](const Node& n) {
          const double parent = n.parent_id == kNoParent ? 0.0 : Visits(n.parent_id);
          return n.lp_bound + rho * parent / std::max(Visits(n.id), 1.0);
        });
      }
      case Rule::kHybridEstimate: {
        const double rho = config_.EffectiveRho();
        return ArgMin(nodes,
                      [&](const Node& n) { return (1.0 - rho) * n.lp_bound + rho * n.estimate; });
      }
      default:
        break;
    }
    const bool blend = Blending(ctx);
    Selection best;
    bool have = false;
    double best_bound = 0.0;
    for (const auto& [id, node] : nodes) {
      Selection s;
      s.id = id;
      s.scaled_bound = ScaledBound(node, ctx);
      s.diversity = ctx.pool ? PartialDiversity(node, *ctx.pool) : 0.0;
      s.scaled_depth = ScaledDepth(node, config_);
      s.blended = blend;
      s.score = blend ? BlendedScore(s.scaled_bound, s.diversity, s.scaled_depth) : s.scaled_bound;
      // Ties fall back to the raw bound, then to the lowest id.
      if (!have || std::tie(s.score, node.lp_bound) < std::tie(best.score, best_bound)) {
        best = s;
        best_bound = node.lp_bound;
        have = true;
      }
    }
    return best;
  }

  // Bookkeeping after the engine dequeues `node`.
  void OnDequeued(const Node& node) {
    if (config_.rule == Rule::kDbfsAlphaD && node.depth >= config_.depth_cutoff) {
      depth_tripped_ = true;
    }
    if (config_.rule == Rule::kUct) {
      for (NodeId id = node.id; id != kNoParent; id = Parent(id)) ++Slot(id);
    }
  }

  // Registers a node's parent so visit counts can be propagated upwards.
  void OnCreated(const Node& node) {
    if (config_.rule != Rule::kUct) return;
    const auto idx = static_cast<std::size_t>(node.id);
    if (parents_.size() <= idx) {
      parents_.resize(idx + 1, kNoParent);
      visits_.resize(idx + 1, 0);
    }
    parents_[idx] = node.parent_id;
  }

  double Visits(NodeId id) const {
    const auto idx = static_cast<std::size_t>(id);
    return idx < visits_.size() ? static_cast<double>(visits_[idx]) : 0.0;
  }

 private:
  static Selection Plain(const Node& node) {
    Selection s;
    s.id = node.id;
    s.score = node.lp_bound;
    return s;
  }

  template <typename Key>
  static Selection ArgMin(const std::map<NodeId, Node>& nodes, Key key) {
    const Node* best = nullptr;
    double best_key = 0.0;
    for (const auto& [id, node] : nodes) {
      const double k = key(node);
      if (best == nullptr || std::tie(k, node.lp_bound) < std::tie(best_key, best->lp_bound)) {
        best = &node;
        best_key = k;
      }
    }
    Selection s = Plain(*best);
    s.score = best_key;
    return s;
  }

  NodeId Parent(NodeId id) const {
    const auto idx = static_cast<std::size_t>(id);
    return idx < parents_.size() ? parents_[idx] : kNoParent;
  }

  std::int64_t& Slot(NodeId id) {
    const auto idx = static_cast<std::size_t>(id);
    if (visits_.size() <= idx) {
      visits_.resize(idx + 1, 0);
      parents_.resize(idx + 1, kNoParent);
    }
    return visits_[idx];
  }

  SelectorConfig config_ = SelectorConfig{}.Resolved(1);
  bool depth_tripped_ = false;
  std::vector<NodeId> parents_;
  std::vector<std::int64_t> visits_;
};

}  // namespace diversitree

#endif  // DIVERSITREE_SELECTORS_HPP_
