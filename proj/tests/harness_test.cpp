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

#include "diversitree/harness.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "diversitree/generators.hpp"
#include "diversitree/json_io.hpp"
#include "oracles/enumeration_oracle.hpp"

namespace diversitree {
namespace {

std::string DataPath(const std::string& file) { return std::string(DIVERSITREE_DATA_DIR) + "/" + file; }

TEST(PresetTest, TableIsExact) {
  ASSERT_EQ(kPresets.size(), 4u);
  const SelectorConfig hhl = PresetSelector("HHL");
  EXPECT_EQ(hhl.rule, Rule::kDiversiTree);
  EXPECT_EQ(hhl.alpha, 0.94);
  EXPECT_EQ(hhl.beta, 0.06);
  EXPECT_EQ(hhl.solution_cutoff, 0.80);
  EXPECT_EQ(FindPreset("HLL").alpha, 0.95);
  EXPECT_EQ(FindPreset("LLH").beta, 0.99);
  EXPECT_EQ(FindPreset("LHH").s, 0.70);
  EXPECT_EQ(FindPreset("LHH").beta, 0.80);
  // HLL's weights sum to 1.01; the bound weight is clamped at zero.
  EXPECT_NO_THROW(PresetSelector("HLL").Validate());
  EXPECT_THROW(FindPreset("XYZ"), ContractViolation);
}

TEST(FindOptimumTest, MaximizedKnapsackIsNegated) {
  const MipInstance mip = LoadInstance(DataPath("knapsack2_max.mps"));
  EXPECT_EQ(FindOptimum(mip), -3.0);
  EXPECT_EQ(mip.ReportedObjective(-3.0), 3.0);
}

TEST(FindOptimumTest, InfeasibleIsLabeled) {
  MipInstance mip;
  mip.variables = {{"x", 0, 1, true}, {"y", 0, 1, true}};
  mip.objective = {1, 1};
  mip.constraints = {MakeConstraint("c", {{0, 1}, {1, 1}}, RowSense::kGreaterEqual, 3)};
  try {
    FindOptimum(mip);
    FAIL();
  } catch (const StageError& e) {
    EXPECT_EQ(e.stage(), "findOptimum");
    EXPECT_NE(std::string(e.what()).find("infeasible"), std::string::npos);
  }
}

TEST(FindOptimumTest, MatchesBruteForce) {
  for (std::uint64_t seed = 40; seed < 50; ++seed) {
    const MipInstance mip = seed % 2 ? MultiKnapsack(seed, 12, 2) : SetCover(seed, 11, 6);
    const auto oracle = testing::BruteForce(mip, std::nullopt);
    ASSERT_TRUE(oracle.optimum.has_value());
    EXPECT_NEAR(FindOptimum(mip), *oracle.optimum, 1e-6) << mip.name;
  }
}

ExperimentSpec DeskSpec() {
  ExperimentSpec spec;
  spec.selector = PresetSelector("HHL");
  spec.label = "HHL";
  spec.q = 0.03;
  spec.p1 = 50;
  spec.p = 10;
  return spec;
}

// 215 solutions within 10% of the optimum.
MipInstance FlatKnapsack() { return MultiKnapsack(7, 16, 1, 50, 60); }

TEST(TwoPhaseTest, DeskContract) {
  const MipInstance mip = FlatKnapsack();
  ExperimentSpec spec = DeskSpec();
  spec.q = 0.1;
  const ExperimentResult r = RunTwoPhase(mip, spec);
  EXPECT_EQ(r.pool_size, 50u);
  EXPECT_FALSE(r.exhausted);
  EXPECT_GT(r.dbin_subset, r.dbin_pool);
  EXPECT_GE(r.dbin_subset, 0.0);
  EXPECT_LE(r.dbin_subset, 1.0);
  EXPECT_EQ(r.subset.size(), std::min<std::size_t>(10, r.pool_size));
  EXPECT_TRUE(std::is_sorted(r.subset.begin(), r.subset.end()));
  EXPECT_GE(r.wall_time_ms, r.optimum_ms + r.phase_one_ms + r.phase_two_ms - 1.0);
  for (double obj : r.subset_objectives) {
    EXPECT_GE(obj, r.z_star_reported * (1 - spec.q) - 1e-6);  // maximized instance
  }
}

TEST(TwoPhaseTest, ExhaustivePoolIsSelectorIndependent) {
  const MipInstance mip = MultiKnapsack(7, 14, 1, 50, 60);
  ExperimentSpec spec = DeskSpec();
  spec.p1 = kUnlimited;
  spec.q = 0.1;
  std::optional<double> dbin;
  for (const RuleInfo& info : kRules) {
    spec.selector.rule = info.rule;
    spec.selector.depth_cutoff = 2;
    const ExperimentResult r = RunTwoPhase(mip, spec);
    EXPECT_TRUE(r.exhausted) << info.name;
    EXPECT_EQ(r.pool_size, 51u) << info.name;
    if (!dbin) dbin = r.dbin_pool;
    EXPECT_NEAR(r.dbin_pool, *dbin, 1e-12) << info.name;
  }
}

TEST(TwoPhaseTest, RepeatedRunsAreIdentical) {
  const MipInstance mip = MixedInstance(5, 8, 2, 2, 4);
  const ExperimentSpec spec = DeskSpec();
  const ExperimentResult a = RunTwoPhase(mip, spec);
  const ExperimentResult b = RunTwoPhase(mip, spec);
  EXPECT_EQ(a.trace_hash, b.trace_hash);
  EXPECT_EQ(RunRecord(spec, a, false).dump(), RunRecord(spec, b, false).dump());
}

TEST(TwoPhaseTest, StageLabels) {
  ExperimentSpec spec = DeskSpec();
  spec.p = 60;
  try {
    RunTwoPhase(MultiKnapsack(1, 5, 1), spec);
    FAIL();
  } catch (const StageError& e) {
    EXPECT_EQ(e.stage(), "spec");
  }
  spec = DeskSpec();
  spec.instance_path = DataPath("bad_bound.mps");
  try {
    RunTwoPhase(spec);
    FAIL();
  } catch (const StageError& e) {
    EXPECT_EQ(e.stage(), "load");
  }
}

TEST(TwoPhaseTest, SmallPoolIsTakenWhole) {
  const MipInstance mip = LoadInstance(DataPath("knapsack2.mps"));
  ExperimentSpec spec = DeskSpec();
  spec.q = 0.0;
  const ExperimentResult r = RunTwoPhase(mip, spec);
  EXPECT_EQ(r.pool_size, 1u);
  EXPECT_EQ(r.subset, (std::vector<std::size_t>{0}));
  EXPECT_EQ(r.dbin_subset, 0.0);
}

TEST(GridTest, CardinalityAndRanking) {
  const MipInstance mip = FlatKnapsack();
  GridAxes axes;
  axes.alpha = {0.2, 0.4};
  axes.beta = {0.1, 0.3};
  axes.s = {0.0, 0.5};
  std::vector<GridRow> rows = GridSearch(mip, axes, DeskSpec());
  EXPECT_EQ(rows.size(), 8u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    ASSERT_TRUE(rows[i].result.has_value());
    EXPECT_GE(rows[i - 1].result->dbin_subset, rows[i].result->dbin_subset);
    EXPECT_EQ(rows[i].rank, static_cast<int>(i) + 1);
  }
  axes.alpha = {0.5, 0.9};
  axes.beta = {0.0, 0.5};
  rows = GridSearch(mip, axes, DeskSpec());
  EXPECT_EQ(rows.size(), 6u);  // (0.9, 0.5) is skipped
  std::ostringstream csv;
  WriteGridCsv(csv, rows);
  const std::string text = csv.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 7);
}

TEST(GridTest, ContainsOrBeatsPreset) {
  const MipInstance mip = FlatKnapsack();
  ExperimentSpec spec = DeskSpec();
  spec.q = 0.1;
  spec.p1 = 20;
  GridAxes axes;
  axes.q = {0.1};
  axes.p1 = {20};
  axes.alpha = {0.5, 0.94};
  axes.beta = {0.06};
  axes.s = {0.8, 0.2};
  const std::vector<GridRow> rows = GridSearch(mip, axes, spec);
  const ExperimentResult hhl = RunTwoPhase(mip, spec);
  ASSERT_TRUE(rows.front().result.has_value());
  EXPECT_GE(rows.front().result->dbin_subset, hhl.dbin_subset);
}

TEST(GridTest, FailuresAreRecorded) {
  const MipInstance mip = MultiKnapsack(9, 8, 1);
  GridAxes axes;
  axes.p1 = {5, 50};  // p = 10 > 5 fails validation
  axes.alpha = {0.5};
  axes.beta = {0.1};
  axes.s = {0.5};
  const std::vector<GridRow> rows = GridSearch(mip, axes, DeskSpec());
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_TRUE(rows[0].result.has_value());
  EXPECT_FALSE(rows[1].result.has_value());
  EXPECT_NE(rows[1].error.find("spec"), std::string::npos);
}

TEST(CompareTest, SelfComparisonIsZero) {
  const MipInstance mip = MultiKnapsack(3, 12, 2);
  const auto rows = CompareSelectors(mip, DeskSpec(), {{"BCBFS", SelectorConfig{}}});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].improvement_percent, 0.0);
}

TEST(CompareTest, ExhaustivePoolsGiveZero) {
  const MipInstance mip = MultiKnapsack(7, 14, 1, 50, 60);
  ExperimentSpec spec = DeskSpec();
  spec.p1 = kUnlimited;
  spec.q = 0.1;
  std::vector<std::pair<std::string, SelectorConfig>> selectors;
  for (const RuleInfo& info : kRules) {
    SelectorConfig cfg = PresetSelector("HHL");
    cfg.rule = info.rule;
    selectors.emplace_back(std::string(info.name), cfg);
  }
  const auto rows = CompareSelectors(mip, spec, selectors);
  for (const ComparisonRow& r : rows) {
    ASSERT_TRUE(r.improvement_percent.has_value()) << r.label;
    EXPECT_NEAR(*r.improvement_percent, 0.0, 1e-9) << r.label;
  }
}

TEST(CompareTest, ImprovementFormula) {
  EXPECT_DOUBLE_EQ(*ImprovementPercent(0.3, 0.2), 50.0);
  EXPECT_EQ(ImprovementPercent(0.0, 0.0), 0.0);
  EXPECT_FALSE(ImprovementPercent(0.1, 0.0).has_value());
}

TEST(JsonTest, InstanceDumpFields) {
  const MipInstance mip = LoadInstance(DataPath("knapsack2_max.mps"));
  const Json j = InstanceToJson(mip);
  EXPECT_EQ(j["name"], mip.name);
  EXPECT_EQ(j["vars"].size(), 2u);
  EXPECT_EQ(j["vars"][0]["type"], "binary");
  EXPECT_EQ(j["cons"][0]["sense"], "<=");
  EXPECT_EQ(j["obj"]["sense"], "max");
  EXPECT_EQ(j["obj"]["coefs"][0], 3.0);
}

TEST(JsonTest, TimingIsOptional) {
  ExperimentResult r;
  EXPECT_FALSE(ResultToJson(r, false).contains("wallTimeMs"));
  EXPECT_TRUE(ResultToJson(r, true).contains("wallTimeMs"));
  EXPECT_EQ(HexHash(255), "00000000000000ff");
}

}  // namespace
}  // namespace diversitree
