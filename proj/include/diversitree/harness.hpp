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

// Two-phase experiment pipeline: z*, cutoff, branch-and-count, subset
// selection, metrics. Also presets, grid search and selector comparison.

#ifndef DIVERSITREE_HARNESS_HPP_
#define DIVERSITREE_HARNESS_HPP_

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "diversitree/diversity.hpp"
#include "diversitree/engine.hpp"
#include "diversitree/error.hpp"
#include "diversitree/model.hpp"
#include "diversitree/mps.hpp"
#include "diversitree/selectors.hpp"
#include "diversitree/subset.hpp"

namespace diversitree {

// ---------------------------------------------------------------------------
// Presets
// ---------------------------------------------------------------------------

struct Preset {
  std::string_view name;
  double alpha;
  double beta;
  double s;
};

inline constexpr std::array<Preset, 4> kPresets = {{
    {"HHL", 0.94, 0.06, 0.80},
    {"HLL", 0.95, 0.06, 0.20},
    {"LLH", 0.01, 0.99, 0.05},
    {"LHH", 0.18, 0.80, 0.70},
}};

inline const Preset& FindPreset(std::string_view name) {
  for (const Preset& p : kPresets) {
    if (p.name == name) return p;
  }
  throw ContractViolation("unknown preset '" + std::string(name) + "'");
}

// A DiversiTree selector carrying the preset's weights and gate.
inline SelectorConfig PresetSelector(std::string_view name) {
  const Preset& p = FindPreset(name);
  SelectorConfig cfg;
  cfg.rule = Rule::kDiversiTree;
  cfg.alpha = p.alpha;
  cfg.beta = p.beta;
  cfg.solution_cutoff = p.s;
  cfg.from_preset = true;
  return cfg;
}

// ---------------------------------------------------------------------------
// Specs and results
// ---------------------------------------------------------------------------

// Raised by RunTwoPhase; stage() names the failing step.
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string& detail)
      : Error(stage + ": " + detail), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

struct ExperimentSpec {
  std::string instance_path;
  double q = 0.03;
  std::size_t p1 = 100;  // kUnlimited for no cap
  std::size_t p = 10;
  SelectorConfig selector = PresetSelector("HHL");
  std::string label;  // preset name or rule name, for reports
  std::uint64_t seed = 0;
  std::int64_t node_limit = 0;
  double time_limit_seconds = 0.0;
  bool dedup = true;
  SubsetMethod subset_method = SubsetMethod::kGreedySwap;

  std::string Label() const { return label.empty() ? std::string(RuleName(selector.rule)) : label; }

  void Validate() const {
    Expects(q >= 0.0, "q must be nonnegative");
    Expects(p >= 1, "p must be at least 1");
    Expects(p <= p1, "p must not exceed p1");
    Expects(node_limit >= 0, "node limit must be nonnegative");
    Expects(time_limit_seconds >= 0.0, "time limit must be nonnegative");
    selector.Validate();
  }
};

struct ExperimentResult {
  std::string instance_name;
  double z_star = 0.0;           // minimization sense
  double z_star_reported = 0.0;  // original sense
  double cutoff = 0.0;           // original sense
  std::size_t pool_size = 0;
  bool exhausted = false;
  bool truncated = false;
  double dbin_pool = 0.0;
  double dbin_subset = 0.0;
  std::optional<double> dall_subset;
  std::vector<std::size_t> subset;  // pool indices, ascending
  std::vector<double> subset_objectives;  // original sense
  std::vector<std::vector<double>> subset_values;
  std::int64_t nodes_processed = 0;
  std::int64_t nodes_created = 0;
  std::int64_t optimum_nodes = 0;
  std::uint64_t trace_hash = 0;
  double optimum_ms = 0.0;
  double phase_one_ms = 0.0;
  double phase_two_ms = 0.0;
  double wall_time_ms = 0.0;
};

// ---------------------------------------------------------------------------
// Pipeline
// ---------------------------------------------------------------------------

inline double Milliseconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since)
      .count();
}

inline MipInstance LoadInstance(const std::string& path) {
  return ReadMpsFile(path).instance;
}

// z* by plain best-first branch-and-bound; non-optimal outcomes throw.
inline double FindOptimum(const MipInstance& instance, const EngineLimits& limits = {},
                          OptimumResult* details = nullptr) {
  const OptimumResult r = SolveOptimum(instance, limits);
  if (details != nullptr) *details = r;
  if (r.status != OptimumStatus::kOptimal) {
    throw StageError("findOptimum", "status " + std::string(OptimumStatusName(r.status)));
  }
  return r.z_star;
}

// Pools of fewer than p solutions are taken whole.
inline ExperimentResult RunTwoPhase(const MipInstance& instance, const ExperimentSpec& spec,
                                    EngineOptions options = {},
                                    CountResult* phase_one = nullptr) {
  const auto start = std::chrono::steady_clock::now();
  try {
    spec.Validate();
  } catch (const Error& e) {
    throw StageError("spec", e.what());
  }
  ExperimentResult out;
  out.instance_name = instance.name;
  EngineLimits limits;
  limits.node_limit = spec.node_limit;
  limits.time_limit_seconds = spec.time_limit_seconds;

  auto stage_start = std::chrono::steady_clock::now();
  OptimumResult opt;
  try {
    out.z_star = FindOptimum(instance, limits, &opt);
  } catch (const StageError&) {
    throw;
  } catch (const Error& e) {
    throw StageError("findOptimum", e.what());
  }
  out.optimum_nodes = opt.nodes_processed;
  out.z_star_reported = instance.ReportedObjective(out.z_star);
  out.optimum_ms = Milliseconds(stage_start);

  stage_start = std::chrono::steady_clock::now();
  CountResult count;
  try {
    out.cutoff = instance.ReportedObjective(CutoffValue(out.z_star, spec.q));
    const MipInstance restricted = AddObjectiveCutoff(instance, out.z_star, spec.q);
    limits.p1 = spec.p1;
    options.dedup = spec.dedup;
    count = RunBranchAndCount(restricted, spec.selector, limits, std::move(options));
  } catch (const Error& e) {
    throw StageError("branchAndCount", e.what());
  }
  out.phase_one_ms = Milliseconds(stage_start);
  out.pool_size = count.pool.size();
  out.exhausted = count.exhausted;
  out.truncated = count.truncated;
  out.nodes_processed = count.nodes_processed;
  out.nodes_created = count.nodes_created;
  out.trace_hash = count.trace_hash;

  stage_start = std::chrono::steady_clock::now();
  try {
    const std::vector<BinaryProjection> proj = Projections(count.pool);
    out.dbin_pool = DbinOrZero(proj);
    // Subset selection sees the pool in projection order, so equal pools
    // found in different orders give the same subset.
    std::vector<std::size_t> order(proj.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return proj[a] < proj[b]; });
    if (proj.size() > spec.p && spec.p >= 2) {
      std::vector<BinaryProjection> sorted;
      for (std::size_t i : order) sorted.push_back(proj[i]);
      for (std::size_t k : SelectDiverseSubset(sorted, spec.p, spec.subset_method).indices) {
        out.subset.push_back(order[k]);
      }
      std::sort(out.subset.begin(), out.subset.end());
    } else {
      out.subset = order;
      std::sort(out.subset.begin(), out.subset.end());
    }
    std::vector<BinaryProjection> chosen;
    std::vector<std::vector<double>> full;
    for (std::size_t i : out.subset) {
      chosen.push_back(proj[i]);
      full.push_back(count.pool[i].values);
      out.subset_objectives.push_back(instance.ReportedObjective(count.pool[i].objective));
      out.subset_values.push_back(count.pool[i].values);
    }
    const DiversityReport report = Report(chosen, full, VariableRanges(instance, full));
    out.dbin_subset = report.dbin;
    out.dall_subset = report.dall;
  } catch (const Error& e) {
    throw StageError("selectDiverseSubset", e.what());
  }
  out.phase_two_ms = Milliseconds(stage_start);
  out.wall_time_ms = Milliseconds(start);
  if (phase_one != nullptr) *phase_one = std::move(count);
  return out;
}

inline ExperimentResult RunTwoPhase(const ExperimentSpec& spec) {
  MipInstance instance;
  try {
    instance = LoadInstance(spec.instance_path);
  } catch (const Error& e) {
    throw StageError("load", e.what());
  }
  return RunTwoPhase(instance, spec);
}

// ---------------------------------------------------------------------------
// Grid search
// ---------------------------------------------------------------------------

struct GridAxes {
  std::vector<double> q = {0.03};
  std::vector<std::size_t> p1 = {100};
  std::vector<double> alpha = {0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<double> beta = {0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<double> s = {0.0, 0.25, 0.5, 0.75, 1.0};
};

struct GridRow {
  double q = 0.0;
  std::size_t p1 = 0;
  double alpha = 0.0;
  double beta = 0.0;
  double s = 0.0;
  std::optional<ExperimentResult> result;
  std::string error;
  int rank = 0;  // 1 = best; failures rank last
};

// One DiversiTree run per valid combo (alpha + beta <= 1), ranked by
// dbinSubset, nonincreasing. Ties keep grid order.
inline std::vector<GridRow> GridSearch(const MipInstance& instance, const GridAxes& axes,
                                       const ExperimentSpec& base = {}) {
  std::vector<GridRow> rows;
  for (double q : axes.q) {
    for (std::size_t p1 : axes.p1) {
      for (double a : axes.alpha) {
        for (double b : axes.beta) {
          if (a + b > 1.0 + 1e-12) continue;
          for (double s : axes.s) {
            GridRow row{q, p1, a, b, s, std::nullopt, {}, 0};
            ExperimentSpec spec = base;
            spec.q = q;
            spec.p1 = p1;
            spec.selector.rule = Rule::kDiversiTree;
            spec.selector.alpha = a;
            spec.selector.beta = b;
            spec.selector.solution_cutoff = s;
            spec.label = "grid";
            try {
              row.result = RunTwoPhase(instance, spec);
            } catch (const Error& e) {
              row.error = e.what();
            }
            rows.push_back(std::move(row));
          }
        }
      }
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const GridRow& x, const GridRow& y) {
    if (x.result.has_value() != y.result.has_value()) return x.result.has_value();
    if (!x.result) return false;
    return x.result->dbin_subset > y.result->dbin_subset;
  });
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].rank = static_cast<int>(i) + 1;
  return rows;
}

inline void WriteGridCsv(std::ostream& out, const std::vector<GridRow>& rows) {
  out << "rank,q,p1,alpha,beta,s,dbinSubset,dbinPool,poolSize,exhausted,nodesProcessed,error\n";
  for (const GridRow& r : rows) {
    out << r.rank << ',' << r.q << ',';
    if (r.p1 == kUnlimited) {
      out << "inf";
    } else {
      out << r.p1;
    }
    out << ',' << r.alpha << ',' << r.beta << ',' << r.s << ',';
    if (r.result) {
      out << r.result->dbin_subset << ',' << r.result->dbin_pool << ',' << r.result->pool_size
          << ',' << (r.result->exhausted ? "true" : "false") << ',' << r.result->nodes_processed
          << ',';
    } else {
      out << ",,,,,";
    }
    std::string err = r.error;
    std::replace(err.begin(), err.end(), '"', '\'');
    if (!err.empty()) out << '"' << err << '"';
    out << '\n';
  }
}

// ---------------------------------------------------------------------------
// Selector comparison
// ---------------------------------------------------------------------------

struct ComparisonRow {
  std::string label;
  SelectorConfig selector;
  std::optional<ExperimentResult> result;
  std::string error;
  // Percent change of dbinSubset against the baseline; empty when either run
  // failed or the baseline scored 0 while this rule did not.
  std::optional<double> improvement_percent;
};

inline std::optional<double> ImprovementPercent(double value, double baseline) {
  if (baseline == 0.0) {
    if (value == 0.0) return 0.0;
    return std::nullopt;
  }
  return (value - baseline) / baseline * 100.0;
}

// Runs `base` once per selector. The baseline is the entry whose label
// matches `baseline_label`; it is run separately when absent from the list.
inline std::vector<ComparisonRow> CompareSelectors(const MipInstance& instance,
                                                   const ExperimentSpec& base,
                                                   const std::vector<std::pair<std::string, SelectorConfig>>& selectors,
                                                   const std::string& baseline_label = "BCBFS") {
  std::vector<ComparisonRow> rows;
  auto run = [&](const std::string& label, const SelectorConfig& cfg) {
    ComparisonRow row{label, cfg, std::nullopt, {}, std::nullopt};
    ExperimentSpec spec = base;
    spec.selector = cfg;
    spec.label = label;
    try {
      row.result = RunTwoPhase(instance, spec);
    } catch (const Error& e) {
      row.error = e.what();
    }
    return row;
  };
  for (const auto& [label, cfg] : selectors) rows.push_back(run(label, cfg));

  std::optional<ExperimentResult> baseline;
  for (const ComparisonRow& r : rows) {
    if (r.label == baseline_label) baseline = r.result;
  }
  const bool listed = std::any_of(rows.begin(), rows.end(),
                                  [&](const ComparisonRow& r) { return r.label == baseline_label; });
  if (!listed) baseline = run(baseline_label, SelectorConfig{}).result;
  if (baseline) {
    for (ComparisonRow& r : rows) {
      if (r.result) r.improvement_percent = ImprovementPercent(r.result->dbin_subset, baseline->dbin_subset);
    }
  }
  return rows;
}

}  // namespace diversitree

#endif  // DIVERSITREE_HARNESS_HPP_
