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

// JSON records for instances, run results and node traces. Key order is fixed
// (ordered_json) so equal inputs serialize to identical bytes. Field names are
// listed in docs/json_formats.md.

#ifndef DIVERSITREE_JSON_IO_HPP_
#define DIVERSITREE_JSON_IO_HPP_

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

#include "json.hpp"

#include "diversitree/engine.hpp"
#include "diversitree/harness.hpp"
#include "diversitree/model.hpp"

namespace diversitree {

using Json = nlohmann::ordered_json;

inline constexpr const char* kResultSchema = "diversitree.result/1";
inline constexpr const char* kInstanceSchema = "diversitree.instance/1";

inline std::string HexHash(std::uint64_t h) {
  char buf[19];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// Infinite bounds become null.
inline Json Bound(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

inline Json Count(std::size_t n) { return n == kUnlimited ? Json(nullptr) : Json(n); }

inline Json InstanceToJson(const MipInstance& mip) {
  Json vars = Json::array();
  for (const VariableDef& v : mip.variables) {
    vars.push_back({{"name", v.name},
                    {"type", v.IsBinary() ? "binary" : v.is_integer ? "integer" : "continuous"},
                    {"lb", Bound(v.lower)},
                    {"ub", Bound(v.upper)}});
  }
  Json cons = Json::array();
  for (const LinearConstraint& c : mip.constraints) {
    Json terms = Json::array();
    for (const Term& t : c.terms) terms.push_back({{"var", t.index}, {"coef", t.value}});
    cons.push_back({{"name", c.name}, {"sense", RowSenseSymbol(c.sense)}, {"rhs", c.rhs},
                    {"terms", std::move(terms)}});
  }
  // Coefficients are stored in the original sense.
  Json coefs = Json::array();
  for (double c : mip.objective) coefs.push_back(mip.maximize ? -c : c);
  return Json{{"schema", kInstanceSchema},
              {"name", mip.name},
              {"vars", std::move(vars)},
              {"cons", std::move(cons)},
              {"obj", {{"sense", mip.maximize ? "max" : "min"}, {"coefs", std::move(coefs)}}}};
}

inline Json SelectorToJson(const SelectorConfig& cfg) {
  Json j{{"rule", RuleName(cfg.rule)},
         {"alpha", cfg.alpha},
         {"beta", cfg.beta},
         {"s", cfg.solution_cutoff},
         {"d", cfg.depth_cutoff},
         {"rho", cfg.EffectiveRho()},
         {"literalScore", cfg.literal_score}};
  return j;
}

inline Json SpecToJson(const ExperimentSpec& spec) {
  return Json{{"instance", spec.instance_path},
              {"label", spec.Label()},
              {"q", spec.q},
              {"p1", Count(spec.p1)},
              {"p", spec.p},
              {"seed", spec.seed},
              {"nodeLimit", spec.node_limit},
              {"timeLimit", spec.time_limit_seconds},
              {"dedup", spec.dedup},
              {"subsetMethod", SubsetMethodName(spec.subset_method)},
              {"selector", SelectorToJson(spec.selector)}};
}

// Timing fields vary between runs and are left out unless asked for.
inline Json ResultToJson(const ExperimentResult& r, bool timing) {
  Json j{{"instanceName", r.instance_name},
         {"zStar", r.z_star_reported},
         {"cutoff", r.cutoff},
         {"poolSize", r.pool_size},
         {"exhausted", r.exhausted},
         {"truncated", r.truncated},
         {"dbinPool", r.dbin_pool},
         {"dbinSubset", r.dbin_subset},
         {"dallSubset", r.dall_subset ? Json(*r.dall_subset) : Json(nullptr)},
         {"subset", r.subset},
         {"subsetObjectives", r.subset_objectives},
         {"subsetSolutions", r.subset_values},
         {"nodesProcessed", r.nodes_processed},
         {"nodesCreated", r.nodes_created},
         {"optimumNodes", r.optimum_nodes},
         {"traceHash", HexHash(r.trace_hash)}};
  if (timing) {
    j["optimumMs"] = r.optimum_ms;
    j["phaseOneMs"] = r.phase_one_ms;
    j["phaseTwoMs"] = r.phase_two_ms;
    j["wallTimeMs"] = r.wall_time_ms;
  }
  return j;
}

inline Json RunRecord(const ExperimentSpec& spec, const ExperimentResult& r, bool timing) {
  return Json{{"schema", kResultSchema}, {"spec", SpecToJson(spec)}, {"result", ResultToJson(r, timing)}};
}

inline Json TraceRecordToJson(const TraceRecord& t) {
  return Json{{"id", t.id},
              {"depth", t.depth},
              {"lpBound", t.lp_bound},
              {"classification", NodeClassName(t.classification)},
              {"poolSize", t.pool_size}};
}

inline Json ComparisonToJson(const std::vector<ComparisonRow>& rows, const std::string& baseline,
                             bool timing) {
  Json out = Json::array();
  for (const ComparisonRow& r : rows) {
    Json j{{"label", r.label}, {"selector", SelectorToJson(r.selector)}};
    j["result"] = r.result ? ResultToJson(*r.result, timing) : Json(nullptr);
    j["error"] = r.error.empty() ? Json(nullptr) : Json(r.error);
    j["improvementPercent"] = r.improvement_percent ? Json(*r.improvement_percent) : Json(nullptr);
    out.push_back(std::move(j));
  }
  return Json{{"schema", kResultSchema}, {"baseline", baseline}, {"rows", std::move(out)}};
}

}  // namespace diversitree

#endif  // DIVERSITREE_JSON_IO_HPP_
