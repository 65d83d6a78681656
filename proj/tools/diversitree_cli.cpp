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

// Command-line front end: solve, enumerate, diverse, compare, grid, generate
// and dump. Results go to --out (default stdout) as JSON, or CSV for grid.

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "diversitree/diversitree.hpp"

namespace dt = diversitree;

namespace {

struct RunFlags {
  std::string instance;
  double q = 0.03;
  std::string p1 = "100";
  std::size_t p = 10;
  std::string rule;
  std::string preset;
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> scut;
  std::optional<int> dcut;
  std::optional<double> rho;
  bool dedup = true;
  bool literal_score = false;
  std::uint64_t seed = 0;
  std::int64_t node_limit = 0;
  double time_limit = 0.0;
  std::string subset_method = "greedySwap";
  std::string trace;
  std::string out;
  bool timing = false;
};

void AddInstanceFlag(CLI::App* cmd, RunFlags& f) {
  cmd->add_option("--instance", f.instance, "MPS file (fixed or free format)")
      ->required()
      ->check(CLI::ExistingFile);
}

void AddLimitFlags(CLI::App* cmd, RunFlags& f) {
  cmd->add_option("--node-limit", f.node_limit, "Stop after this many nodes (0 = none)");
  cmd->add_option("--time-limit", f.time_limit, "Wall-clock limit in seconds (0 = none)");
  cmd->add_option("--out", f.out, "Output file (default stdout)");
}

void AddRunFlags(CLI::App* cmd, RunFlags& f) {
  AddInstanceFlag(cmd, f);
  cmd->add_option("--q", f.q, "Relative optimality gap")->check(CLI::NonNegativeNumber);
  cmd->add_option("--p1", f.p1, "Phase-one pool cap, or 'inf'");
  cmd->add_option("--p", f.p, "Number of diverse solutions");
  cmd->add_option("--rule", f.rule, "Node selection rule");
  cmd->add_option("--preset", f.preset, "Parameter preset")
      ->check(CLI::IsMember({"HHL", "HLL", "LLH", "LHH"}));
  cmd->add_option("--alpha", f.alpha, "Diversity weight");
  cmd->add_option("--beta", f.beta, "Depth weight");
  cmd->add_option("--scut", f.scut, "Solution gate s, a fraction of p1");
  cmd->add_option("--dcut", f.dcut, "Depth gate d");
  cmd->add_option("--rho", f.rho, "UCT exploration or hybrid-estimate weight");
  cmd->add_option("--dedup", f.dedup, "Drop solutions with a repeated binary projection");
  cmd->add_option("--literal-score", f.literal_score, "Use the literal +D/+H score forms");
  cmd->add_option("--seed", f.seed, "Seed recorded with the run");
  cmd->add_option("--subset-method", f.subset_method, "greedy, greedySwap or exact");
  cmd->add_option("--trace", f.trace, "Write one JSON line per processed node");
  cmd->add_flag("--timing", f.timing, "Include stage timings in the JSON record");
  AddLimitFlags(cmd, f);
}

std::size_t ParseCount(const std::string& text) {
  if (text == "inf" || text == "unlimited") return dt::kUnlimited;
  std::size_t pos = 0;
  const unsigned long long v = std::stoull(text, &pos);
  if (pos != text.size()) throw dt::ContractViolation("bad count '" + text + "'");
  return static_cast<std::size_t>(v);
}

// Preset first, then the rule, then individual parameters.
dt::SelectorConfig BuildSelector(const RunFlags& f) {
  dt::SelectorConfig cfg = dt::PresetSelector(f.preset.empty() ? "HHL" : f.preset);
  if (!f.rule.empty()) {
    cfg.rule = dt::ParseRule(f.rule);
    if (f.preset.empty() && !dt::UsesScaledBound(cfg.rule)) cfg = dt::SelectorConfig{cfg.rule};
  }
  if (f.alpha) cfg.alpha = *f.alpha;
  if (f.beta) cfg.beta = *f.beta;
  if (f.alpha || f.beta) cfg.from_preset = false;
  if (f.scut) cfg.solution_cutoff = *f.scut;
  if (f.dcut) cfg.depth_cutoff = *f.dcut;
  if (f.rho) cfg.rho = *f.rho;
  cfg.literal_score = f.literal_score;
  return cfg;
}

std::string Label(const RunFlags& f) {
  if (!f.preset.empty() && f.rule.empty()) return f.preset;
  if (!f.rule.empty()) return std::string(dt::RuleName(dt::ParseRule(f.rule)));
  return "HHL";
}

dt::ExperimentSpec BuildSpec(const RunFlags& f) {
  dt::ExperimentSpec spec;
  spec.instance_path = f.instance;
  spec.q = f.q;
  spec.p1 = ParseCount(f.p1);
  spec.p = f.p;
  spec.selector = BuildSelector(f);
  spec.label = Label(f);
  spec.seed = f.seed;
  spec.node_limit = f.node_limit;
  spec.time_limit_seconds = f.time_limit;
  spec.dedup = f.dedup;
  spec.subset_method = dt::ParseSubsetMethod(f.subset_method);
  return spec;
}

dt::MipInstance Load(const std::string& path) {
  dt::MpsReadResult r;
  try {
    r = dt::ReadMpsFile(path);
  } catch (const dt::Error& e) {
    throw dt::StageError("load", e.what());
  }
  for (const std::string& w : r.warnings) spdlog::warn("{}: {}", path, w);
  spdlog::info("loaded {} ({} vars, {} rows, {} binary)", r.instance.name,
               r.instance.num_variables(), r.instance.num_constraints(),
               r.instance.BinaryIndices().size());
  return std::move(r.instance);
}

void Emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw dt::Error("cannot write " + path);
  out << text;
}

void WriteTrace(const std::string& path, const dt::CountResult& count) {
  if (path.empty()) return;
  std::ostringstream lines;
  for (const dt::TraceRecord& t : count.trace) lines << dt::TraceRecordToJson(t).dump() << '\n';
  Emit(path, lines.str());
}

int Solve(const RunFlags& f) {
  const dt::MipInstance mip = Load(f.instance);
  dt::EngineLimits limits;
  limits.node_limit = f.node_limit;
  limits.time_limit_seconds = f.time_limit;
  const dt::OptimumResult r = dt::SolveOptimum(mip, limits);
  dt::Json j{{"schema", dt::kResultSchema},
             {"instance", f.instance},
             {"status", dt::OptimumStatusName(r.status)}};
  if (r.status == dt::OptimumStatus::kOptimal) {
    j["zStar"] = mip.ReportedObjective(r.z_star);
    dt::Json sol = dt::Json::object();
    for (int k = 0; k < mip.num_variables(); ++k) sol[mip.variables[k].name] = r.solution[k] + 0.0;
    j["solution"] = std::move(sol);
  }
  j["nodesProcessed"] = r.nodes_processed;
  if (f.timing) j["wallTimeMs"] = r.wall_time_seconds * 1000.0;
  Emit(f.out, j.dump(2) + "\n");
  return r.status == dt::OptimumStatus::kOptimal ? 0 : 3;
}

int Enumerate(const RunFlags& f) {
  const dt::MipInstance mip = Load(f.instance);
  const dt::ExperimentSpec spec = BuildSpec(f);
  spec.Validate();
  dt::EngineLimits limits;
  limits.node_limit = f.node_limit;
  limits.time_limit_seconds = f.time_limit;
  const double z_star = dt::FindOptimum(mip, limits);
  spdlog::info("z* = {}", mip.ReportedObjective(z_star));
  limits.p1 = spec.p1;
  dt::EngineOptions options;
  options.dedup = spec.dedup;
  const dt::CountResult count = dt::RunBranchAndCount(dt::AddObjectiveCutoff(mip, z_star, spec.q),
                                                      spec.selector, limits, options);
  WriteTrace(f.trace, count);
  dt::Json sols = dt::Json::array();
  for (const dt::Solution& s : count.pool.solutions()) {
    sols.push_back({{"objective", mip.ReportedObjective(s.objective)}, {"values", s.values}});
  }
  dt::Json j{{"schema", dt::kResultSchema},
             {"spec", dt::SpecToJson(spec)},
             {"zStar", mip.ReportedObjective(z_star)},
             {"cutoff", mip.ReportedObjective(dt::CutoffValue(z_star, spec.q))},
             {"poolSize", count.pool.size()},
             {"exhausted", count.exhausted},
             {"truncated", count.truncated},
             {"dbinPool", dt::DbinOrZero(dt::Projections(count.pool))},
             {"nodesProcessed", count.nodes_processed},
             {"nodesCreated", count.nodes_created},
             {"traceHash", dt::HexHash(count.trace_hash)},
             {"solutions", std::move(sols)}};
  if (f.timing) j["wallTimeMs"] = count.wall_time_seconds * 1000.0;
  Emit(f.out, j.dump(2) + "\n");
  return 0;
}

int Diverse(const RunFlags& f) {
  const dt::MipInstance mip = Load(f.instance);
  const dt::ExperimentSpec spec = BuildSpec(f);
  dt::CountResult count;
  const dt::ExperimentResult r = dt::RunTwoPhase(mip, spec, {}, &count);
  spdlog::info("pool {} (exhausted {}), dbin pool {:.4f}, dbin subset {:.4f}", r.pool_size,
               r.exhausted, r.dbin_pool, r.dbin_subset);
  WriteTrace(f.trace, count);
  Emit(f.out, dt::RunRecord(spec, r, f.timing).dump(2) + "\n");
  return 0;
}

std::pair<std::string, dt::SelectorConfig> NamedSelector(const std::string& name,
                                                        const dt::SelectorConfig& base) {
  for (const dt::Preset& p : dt::kPresets) {
    if (p.name == name) return {name, dt::PresetSelector(name)};
  }
  if (name == "BCBFS") return {name, dt::SelectorConfig{}};
  dt::SelectorConfig cfg = base;
  cfg.rule = dt::ParseRule(name);
  return {std::string(dt::RuleName(cfg.rule)), cfg};
}

int Compare(const RunFlags& f, const std::vector<std::string>& rules, const std::string& baseline,
            const std::string& csv) {
  const dt::MipInstance mip = Load(f.instance);
  const dt::ExperimentSpec spec = BuildSpec(f);
  std::vector<std::pair<std::string, dt::SelectorConfig>> selectors;
  for (const std::string& name : rules) selectors.push_back(NamedSelector(name, spec.selector));
  const auto rows = dt::CompareSelectors(mip, spec, selectors, baseline);
  for (const dt::ComparisonRow& r : rows) {
    if (!r.error.empty()) spdlog::warn("{} failed: {}", r.label, r.error);
  }
  if (!csv.empty()) {
    std::ostringstream text;
    text << "label,dbinSubset,dbinPool,poolSize,exhausted,nodesProcessed,improvementPercent,error\n";
    for (const dt::ComparisonRow& r : rows) {
      text << r.label << ',';
      if (r.result) {
        text << r.result->dbin_subset << ',' << r.result->dbin_pool << ',' << r.result->pool_size
             << ',' << (r.result->exhausted ? "true" : "false") << ',' << r.result->nodes_processed;
      } else {
        text << ",,,,";
      }
      text << ',';
      if (r.improvement_percent) text << *r.improvement_percent;
      text << ',' << (r.error.empty() ? "" : "\"" + r.error + "\"") << '\n';
    }
    Emit(csv, text.str());
  }
  Emit(f.out, dt::ComparisonToJson(rows, baseline, f.timing).dump(2) + "\n");
  return 0;
}

struct GridFlags {
  std::vector<double> q;  // empty: the single --q value
  std::vector<std::string> p1;
  std::vector<double> alpha = {0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<double> beta = {0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<double> s = {0.0, 0.25, 0.5, 0.75, 1.0};
};

int Grid(const RunFlags& f, const GridFlags& g) {
  const dt::MipInstance mip = Load(f.instance);
  dt::ExperimentSpec base = BuildSpec(f);
  dt::GridAxes axes;
  axes.q = g.q.empty() ? std::vector<double>{f.q} : g.q;
  axes.p1.clear();
  for (const std::string& text : g.p1) axes.p1.push_back(ParseCount(text));
  if (axes.p1.empty()) axes.p1.push_back(base.p1);
  axes.alpha = g.alpha;
  axes.beta = g.beta;
  axes.s = g.s;
  const auto rows = dt::GridSearch(mip, axes, base);
  std::ostringstream csv;
  dt::WriteGridCsv(csv, rows);
  Emit(f.out, csv.str());
  return 0;
}

struct GenerateFlags {
  std::string family = "knapsack";
  int n = 12;
  int m = 2;
  int k = 2;
  int integers = 2;
  int continuous = 2;
  int profit_lo = 1;
  int profit_hi = 20;
  std::uint64_t seed = 1;
  std::string format = "mps";
  std::string out;
};

dt::MipInstance Generate(const GenerateFlags& g) {
  if (g.family == "knapsack") return dt::MultiKnapsack(g.seed, g.n, g.m, g.profit_lo, g.profit_hi);
  if (g.family == "setcover") return dt::SetCover(g.seed, g.n, g.m);
  if (g.family == "mixed") return dt::MixedInstance(g.seed, g.n, g.integers, g.continuous, g.m);
  return dt::ComplementarySubcubes(g.seed, g.n, g.k);
}

void ConfigureLogging() {
  auto logger = spdlog::stderr_color_mt("diversitree");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("DIVERSITREE_LOG")) {
    spdlog::set_level(spdlog::level::from_str(env));
  }
}

}  // namespace

int main(int argc, char** argv) {
  ConfigureLogging();
  CLI::App app{"Diverse near-optimal MIP solutions by branch-and-count"};
  app.require_subcommand(1);

  RunFlags f;
  auto* solve = app.add_subcommand("solve", "Optimal value by branch-and-bound");
  AddInstanceFlag(solve, f);
  AddLimitFlags(solve, f);
  solve->add_flag("--timing", f.timing, "Include wall time");

  auto* enumerate = app.add_subcommand("enumerate", "Phase one only: the near-optimal pool");
  AddRunFlags(enumerate, f);

  auto* diverse = app.add_subcommand("diverse", "Both phases: pool, then a diverse subset");
  AddRunFlags(diverse, f);

  std::vector<std::string> rules = {"bestfs", "dfs", "brfs", "uct", "he", "diversitree", "HHL",
                                    "HLL", "LLH", "LHH"};
  std::string baseline = "bestfs";
  std::string compare_csv;
  auto* compare = app.add_subcommand("compare", "Run several selectors and compare dbinSubset");
  AddRunFlags(compare, f);
  compare->add_option("--rules", rules, "Rule or preset names")->delimiter(',');
  compare->add_option("--baseline", baseline, "Label of the baseline run");
  compare->add_option("--csv", compare_csv, "Also write a CSV table here");

  GridFlags g;
  auto* grid = app.add_subcommand("grid", "DiversiTree grid search over q, p1, alpha, beta, s");
  AddRunFlags(grid, f);
  grid->add_option("--qs", g.q, "q values")->delimiter(',');
  grid->add_option("--p1s", g.p1, "p1 values")->delimiter(',');
  grid->add_option("--alphas", g.alpha, "alpha values")->delimiter(',');
  grid->add_option("--betas", g.beta, "beta values")->delimiter(',');
  grid->add_option("--scuts", g.s, "s values")->delimiter(',');

  GenerateFlags gen;
  auto* generate = app.add_subcommand("generate", "Write a generated instance");
  generate->add_option("--family", gen.family, "knapsack, setcover, mixed or subcubes")
      ->check(CLI::IsMember({"knapsack", "setcover", "mixed", "subcubes"}));
  generate->add_option("--n", gen.n, "Variables (binaries for mixed)");
  generate->add_option("--m", gen.m, "Rows");
  generate->add_option("--k", gen.k, "Subcube radius");
  generate->add_option("--integers", gen.integers, "General integers (mixed)");
  generate->add_option("--continuous", gen.continuous, "Continuous variables (mixed)");
  generate->add_option("--profit-lo", gen.profit_lo, "Lowest knapsack profit");
  generate->add_option("--profit-hi", gen.profit_hi, "Highest knapsack profit");
  generate->add_option("--seed", gen.seed, "Generator seed");
  generate->add_option("--format", gen.format, "mps or json")->check(CLI::IsMember({"mps", "json"}));
  generate->add_option("--out", gen.out, "Output file (default stdout)");

  std::string dump_out;
  auto* dump = app.add_subcommand("dump", "Print an instance as JSON");
  AddInstanceFlag(dump, f);
  dump->add_option("--out", dump_out, "Output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) return Solve(f);
    if (enumerate->parsed()) return Enumerate(f);
    if (diverse->parsed()) return Diverse(f);
    if (compare->parsed()) return Compare(f, rules, baseline, compare_csv);
    if (grid->parsed()) return Grid(f, g);
    if (generate->parsed()) {
      const dt::MipInstance mip = Generate(gen);
      Emit(gen.out, gen.format == "mps" ? dt::WriteMpsString(mip)
                                        : dt::InstanceToJson(mip).dump(2) + "\n");
      return 0;
    }
    if (dump->parsed()) {
      Emit(dump_out, dt::InstanceToJson(Load(f.instance)).dump(2) + "\n");
      return 0;
    }
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return 1;
  }
  return 0;
}
