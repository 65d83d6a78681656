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

#include "diversitree/simplex.hpp"

#include <gtest/gtest.h>

#include <random>

#include "diversitree/relaxation.hpp"
#include "oracles/dense_lp_oracle.hpp"
#include "random_lp.hpp"

namespace diversitree {
namespace {

using testing::OracleStatus;
using testing::RandomLp;
using testing::SolveWithOracle;

MipInstance Knapsack2() {
  MipInstance mip;
  mip.name = "knap2";
  mip.variables = {{"x1", 0, 1, true}, {"x2", 0, 1, true}};
  mip.objective = {-3, -2};
  mip.constraints = {MakeConstraint("cap", {{0, 1}, {1, 1}}, RowSense::kLessEqual, 1)};
  return mip;
}

bool SameStatus(LpStatus a, OracleStatus b) {
  return (a == LpStatus::kOptimal && b == OracleStatus::kOptimal) ||
         (a == LpStatus::kInfeasible && b == OracleStatus::kInfeasible) ||
         (a == LpStatus::kUnbounded && b == OracleStatus::kUnbounded);
}

void ExpectPrimalFeasible(const LpProblem& lp, const std::vector<double>& lower,
                          const std::vector<double>& upper, const LpResult& r) {
  const double tol = 1e-6;
  for (int j = 0; j < lp.num_cols; ++j) {
    EXPECT_GE(r.primal[j], lower[j] - tol);
    EXPECT_LE(r.primal[j], upper[j] + tol);
  }
  for (int i = 0; i < lp.num_rows(); ++i) {
    double act = 0.0;
    for (const Term& t : lp.rows[i]) act += t.value * r.primal[t.index];
    EXPECT_GE(act, lp.row_lower[i] - tol);
    EXPECT_LE(act, lp.row_upper[i] + tol);
  }
}

TEST(SimplexTest, NegatedKnapsackByInspection) {
  const MipInstance mip = Knapsack2();
  const LpResult r = SolveRelaxation(mip, LocalBounds::FromInstance(mip));
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.objective, -3.0, 1e-9);
  EXPECT_NEAR(r.primal[0], 1.0, 1e-9);
  EXPECT_NEAR(r.primal[1], 0.0, 1e-9);
  EXPECT_TRUE(r.fractional_vars.empty());
}

TEST(SimplexTest, ContradictoryBoundIsInfeasible) {
  MipInstance mip;
  mip.variables = {{"x1", 1, 1, false}};
  mip.objective = {1};
  mip.constraints = {MakeConstraint("c", {{0, 1}}, RowSense::kLessEqual, 0)};
  EXPECT_EQ(SolveRelaxation(mip, LocalBounds::FromInstance(mip)).status,
            LpStatus::kInfeasible);
}

TEST(SimplexTest, CrossedLocalBoundsAreInfeasible) {
  const MipInstance mip = Knapsack2();
  LocalBounds b = LocalBounds::FromInstance(mip);
  b.lower[0] = 1;
  b.upper[0] = 0;
  EXPECT_EQ(SolveRelaxation(mip, b).status, LpStatus::kInfeasible);
}

TEST(SimplexTest, UnboundedRay) {
  LpProblem lp;
  lp.num_cols = 2;
  lp.cost = {-1, 0};
  lp.col_lower = {0, 0};
  lp.col_upper = {kInf, kInf};
  lp.rows = {{{0, 1}, {1, -1}}};
  lp.row_lower = {-kInf};
  lp.row_upper = {1};
  EXPECT_EQ(SolveLp(lp).status, LpStatus::kUnbounded);
}

TEST(SimplexTest, NoRowsPicksCheapBounds) {
  LpProblem lp;
  lp.num_cols = 3;
  lp.cost = {1, -2, 0};
  lp.col_lower = {-1, 0, -kInf};
  lp.col_upper = {4, 3, kInf};
  const LpResult r = SolveLp(lp);
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.objective, -7.0, 1e-12);
}

TEST(SimplexTest, FractionalVarsReported) {
  MipInstance mip = Knapsack2();
  mip.constraints[0] = MakeConstraint("cap", {{0, 2}, {1, 2}}, RowSense::kLessEqual, 1);
  const LpResult r = SolveRelaxation(mip, LocalBounds::FromInstance(mip));
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_NEAR(r.objective, -1.5, 1e-9);
  EXPECT_EQ(r.fractional_vars, std::vector<int>{0});
}

TEST(SimplexTest, IterationLimitReportsStalled) {
  std::mt19937_64 rng(7);
  SimplexOptions options;
  options.max_iterations = 1;
  int stalled = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const LpProblem lp = RandomLp(rng, 8, 8);
    if (SolveLp(lp, options).status == LpStatus::kStalled) ++stalled;
  }
  EXPECT_GT(stalled, 0);
}

// Random 6x6 LPs against the independent standard-form oracle.
TEST(SimplexTest, MatchesOracleOnRandom6x6) {
  std::mt19937_64 rng(20260601);
  int optimal = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const LpProblem lp = RandomLp(rng, 6, 6);
    const LpResult r = SolveLp(lp);
    const auto o = SolveWithOracle(lp);
    ASSERT_TRUE(SameStatus(r.status, o.status))
        << "trial " << trial << " ours=" << LpStatusName(r.status);
    if (r.status != LpStatus::kOptimal) continue;
    ++optimal;
    EXPECT_NEAR(r.objective, o.objective, 1e-6) << "trial " << trial;
    ExpectPrimalFeasible(lp, lp.col_lower, lp.col_upper, r);
    EXPECT_TRUE(r.dual_feasible) << "trial " << trial;
    EXPECT_NEAR(r.dual_objective, r.objective, 1e-6) << "trial " << trial;
  }
  EXPECT_GT(optimal, 100);
}

TEST(WarmStartTest, FixingNonbasicAtItsBoundKeepsObjective) {
  MipInstance mip = Knapsack2();
  const LpProblem lp = BuildLp(mip);
  const LocalBounds root = LocalBounds::FromInstance(mip);
  const LpResult parent = SolveRelaxation(mip, lp, root);
  ASSERT_EQ(parent.status, LpStatus::kOptimal);
  ASSERT_TRUE(parent.basis);
  // x2 = 0 is nonbasic at its lower bound; fixing it there changes nothing.
  LocalBounds child = root;
  child.upper[1] = 0;
  const LpResult warm = WarmStartFromParent(mip, lp, *parent.basis, child);
  ASSERT_EQ(warm.status, LpStatus::kOptimal);
  EXPECT_NEAR(warm.objective, parent.objective, 1e-12);
  EXPECT_TRUE(warm.warm_started);
}

TEST(WarmStartTest, InfeasibleChildMatchesColdSolve) {
  MipInstance mip = Knapsack2();
  mip.constraints.push_back(MakeConstraint("cover", {{0, 1}, {1, 1}}, RowSense::kGreaterEqual, 1));
  const LpProblem lp = BuildLp(mip);
  const LocalBounds root = LocalBounds::FromInstance(mip);
  const LpResult parent = SolveRelaxation(mip, lp, root);
  ASSERT_EQ(parent.status, LpStatus::kOptimal);
  LocalBounds child = root;
  child.upper[0] = 0;
  child.upper[1] = 0;
  const LpResult warm = WarmStartFromParent(mip, lp, *parent.basis, child);
  const LpResult cold = SolveRelaxation(mip, lp, child);
  EXPECT_EQ(warm.status, LpStatus::kInfeasible);
  EXPECT_EQ(cold.status, LpStatus::kInfeasible);
}

// Paired parent/child solves: warm and cold agree, and the child bound never
// drops below the parent's.
TEST(WarmStartTest, RandomPairsAgreeWithColdSolve) {
  std::mt19937_64 rng(99);
  int pairs = 0;
  int warm_used = 0;
  while (pairs < 50) {
    const LpProblem lp = RandomLp(rng, 8, 8);
    const LpResult parent = SolveLp(lp);
    if (parent.status != LpStatus::kOptimal || !parent.basis) continue;
    std::uniform_int_distribution<int> pick(0, lp.num_cols - 1);
    const int j = pick(rng);
    const double v = parent.primal[j];
    std::vector<double> lower = lp.col_lower;
    std::vector<double> upper = lp.col_upper;
    // Branch-style cut through the parent value.
    if (rng() % 2 == 0) {
      upper[j] = std::floor(v - 0.25);
      if (upper[j] < lower[j]) upper[j] = lower[j];
    } else {
      lower[j] = std::ceil(v + 0.25);
      if (lower[j] > upper[j]) lower[j] = upper[j];
    }
    const LpResult warm = WarmStartLp(lp, *parent.basis, lower, upper);
    const LpResult cold = SolveLp(lp, lower, upper);
    ASSERT_EQ(warm.status, cold.status) << "pair " << pairs;
    if (cold.status == LpStatus::kOptimal) {
      EXPECT_NEAR(warm.objective, cold.objective, 1e-6) << "pair " << pairs;
      EXPECT_GE(warm.objective, parent.objective - 1e-6);
      ExpectPrimalFeasible(lp, lower, upper, warm);
      EXPECT_NEAR(warm.dual_objective, warm.objective, 1e-6);
    }
    warm_used += warm.warm_started ? 1 : 0;
    ++pairs;
  }
  EXPECT_GT(warm_used, 25);
}

}  // namespace
}  // namespace diversitree
