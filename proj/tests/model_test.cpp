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

#include "diversitree/model.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "diversitree/generators.hpp"
#include "diversitree/mps.hpp"
#include "oracles/enumeration_oracle.hpp"

namespace diversitree {
namespace {

std::string DataPath(const std::string& file) { return std::string(DIVERSITREE_DATA_DIR) + "/" + file; }

MpsParseError ParseFailure(const std::string& text) {
  try {
    ReadMpsString(text);
  } catch (const MpsParseError& e) {
    return e;
  }
  ADD_FAILURE() << "expected a parse error";
  return MpsParseError(MpsErrorKind::kIo, 0, "none");
}

TEST(MpsTest, KnapsackFixture) {
  const MpsReadResult r = ReadMpsFile(DataPath("knapsack2.mps"));
  const MipInstance& mip = r.instance;
  EXPECT_EQ(mip.name, "knap2");
  EXPECT_EQ(mip.num_variables(), 2);
  EXPECT_EQ(mip.BinaryIndices().size(), 2u);
  EXPECT_EQ(mip.num_constraints(), 1);
  EXPECT_FALSE(mip.maximize);
  EXPECT_EQ(mip.objective, (std::vector<double>{-3, -2}));
  EXPECT_EQ(mip.constraints[0].sense, RowSense::kLessEqual);
  EXPECT_EQ(mip.constraints[0].rhs, 1.0);
}

TEST(MpsTest, MaximizeIsNegatedAndFlagged) {
  const MipInstance mip = ReadMpsFile(DataPath("knapsack2_max.mps")).instance;
  EXPECT_TRUE(mip.maximize);
  EXPECT_EQ(mip.objective, (std::vector<double>{-3, -2}));
  EXPECT_EQ(mip.ReportedObjective(-3.0), 3.0);
  EXPECT_EQ(mip.BinaryIndices().size(), 2u);
}

TEST(MpsTest, BoundOnUnknownColumnReportsItsLine) {
  try {
    ReadMpsFile(DataPath("bad_bound.mps"));
    FAIL() << "expected a parse error";
  } catch (const MpsParseError& e) {
    EXPECT_EQ(e.kind(), MpsErrorKind::kUnknownColumn);
    EXPECT_EQ(e.line(), 12);
    EXPECT_NE(std::string(e.what()).find("zz"), std::string::npos);
  }
}

TEST(MpsTest, FixedFormatWithRangesAndSpacesInNames) {
  const MpsReadResult r = ReadMpsFile(DataPath("ranged_fixed.mps"));
  const MipInstance& mip = r.instance;
  ASSERT_EQ(mip.num_variables(), 3);
  EXPECT_EQ(mip.variables[0].name, "X 1");
  EXPECT_TRUE(mip.variables[0].is_integer);
  EXPECT_EQ(mip.variables[0].upper, 4.0);
  EXPECT_FALSE(mip.variables[1].is_integer);
  EXPECT_EQ(mip.variables[1].lower, -1.0);
  EXPECT_EQ(mip.variables[2].lower, -kInf);
  // LIM 1 carries a range and becomes two rows.
  ASSERT_EQ(mip.num_constraints(), 4);
  EXPECT_EQ(mip.constraints[0].name, "LIM 1");
  EXPECT_EQ(mip.constraints[0].sense, RowSense::kGreaterEqual);
  EXPECT_EQ(mip.constraints[0].rhs, 1.0);
  EXPECT_EQ(mip.constraints[3].name, "LIM 1#range");
  EXPECT_EQ(mip.constraints[3].sense, RowSense::kLessEqual);
  EXPECT_EQ(mip.constraints[3].rhs, 4.0);
  EXPECT_EQ(mip.constraints[2].sense, RowSense::kEqual);
  EXPECT_FALSE(r.warnings.empty());  // objective constant ignored
}

TEST(MpsTest, ErrorKinds) {
  EXPECT_EQ(ParseFailure("NAME t\nROWS\n N obj\n L c\n L c\nENDATA\n").kind(),
            MpsErrorKind::kDuplicateRow);
  EXPECT_EQ(ParseFailure("NAME t\nROWS\n N obj\n L c\n L c\nENDATA\n").line(), 5);
  EXPECT_EQ(ParseFailure("NAME t\nROWZ\n N obj\nENDATA\n").kind(), MpsErrorKind::kBadSection);
  EXPECT_EQ(ParseFailure("NAME t\nROWS\n N obj\nCOLUMNS\n x nope 1\nENDATA\n").kind(),
            MpsErrorKind::kUnknownRow);
  EXPECT_EQ(ParseFailure("NAME t\nROWS\n N obj\nCOLUMNS\n x obj 1\nBOUNDS\n XX b x 1\nENDATA\n").kind(),
            MpsErrorKind::kBadBoundType);
  EXPECT_EQ(ParseFailure("NAME t\nROWS\n N obj\nCOLUMNS\n x obj abc\nENDATA\n").kind(),
            MpsErrorKind::kBadNumber);
}

// Random instances with every bound shape survive write then read.
MipInstance RandomInstance(std::mt19937_64& rng) {
  MipInstance mip = MixedInstance(rng(), 1 + rng() % 4, rng() % 3, rng() % 3, 1 + rng() % 4);
  mip.maximize = rng() % 2;
  std::uniform_int_distribution<int> kind(0, 5);
  for (VariableDef& v : mip.variables) {
    if (v.IsBinary()) continue;
    switch (kind(rng)) {
      case 0: v.lower = -kInf; v.upper = kInf; break;
      case 1: v.lower = -kInf; v.upper = 2.5; break;
      case 2: v.lower = -3; v.upper = -3; break;
      case 3: v.lower = 0.125; v.upper = kInf; break;
      case 4: v.lower = -2; v.upper = 1.0 / 3.0; break;
      default: break;
    }
  }
  if (rng() % 2 && mip.num_constraints() > 0) mip.constraints[0].sense = RowSense::kEqual;
  return mip;
}

TEST(MpsTest, RoundTripIsStructurallyEqual) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const MipInstance mip = RandomInstance(rng);
    const std::string text = WriteMpsString(mip);
    const MipInstance back = ReadMpsString(text).instance;
    EXPECT_EQ(back, mip) << text;
  }
}

TEST(MpsTest, RoundTripKeepsCutoffRow) {
  const MipInstance mip = AddObjectiveCutoff(MultiKnapsack(3, 5, 1), -20, 0.05);
  const MipInstance back = ReadMpsString(WriteMpsString(mip)).instance;
  EXPECT_EQ(back, mip);
  ASSERT_TRUE(back.cutoff_row.has_value());
}

TEST(ModelTest, ValidateRejectsBadReferences) {
  MipInstance mip;
  mip.variables = {{"x", 0, 1, true}};
  mip.objective = {1};
  mip.constraints = {LinearConstraint{"c", {{3, 1.0}}, RowSense::kLessEqual, 1}};
  EXPECT_THROW(mip.Validate(), ModelError);
}

TEST(CutoffTest, Values) {
  EXPECT_NEAR(CutoffValue(100, 0.03), 103, 1e-12);
  EXPECT_EQ(CutoffValue(0, 0.05), 0.0);
  EXPECT_NEAR(CutoffValue(-100, 0.03), -97, 1e-12);
  EXPECT_THROW(CutoffValue(1, -0.1), ContractViolation);
  const CutoffSpec spec = CutoffSpec::Make(100, 0.03);
  EXPECT_GE(spec.cutoff_value, spec.z_star);
}

// Three general integers with z* = -100; the cutoff row must admit exactly the
// points within 3% relative gap.
TEST(CutoffTest, NegativeOptimumAdmitsRelativeGap) {
  MipInstance mip;
  for (const char* n : {"a", "b", "c"}) mip.variables.push_back({n, 0, 10, true});
  mip.objective = {-10, -3, -1};
  mip.constraints = {MakeConstraint("cap", {{0, 10}, {1, 3}, {2, 1}}, RowSense::kLessEqual, 100)};
  const auto opt = testing::BruteForce(mip, std::nullopt);
  ASSERT_EQ(*opt.optimum, -100.0);
  const MipInstance cut = AddObjectiveCutoff(mip, -100, 0.03);
  std::set<std::vector<double>> admitted;
  std::set<std::vector<double>> within_gap;
  testing::ForEachIntegerAssignment(mip, [&](std::vector<double>& x) {
    if (cut.IsFeasible(x, 1e-9)) admitted.insert(x);
    if (mip.IsFeasible(x, 1e-9) && (mip.Objective(x) + 100.0) / 100.0 <= 0.03 + 1e-12) {
      within_gap.insert(x);
    }
  });
  EXPECT_EQ(admitted, within_gap);
  EXPECT_GT(admitted.size(), 5u);
}

TEST(CutoffTest, ZeroGapAdmitsOptimalFace) {
  for (std::uint64_t seed : {21u, 22u, 23u, 24u}) {
    const MipInstance mip = seed % 2 ? MultiKnapsack(seed, 10, 2) : SetCover(seed, 10, 5);
    const auto opt = testing::BruteForce(mip, std::nullopt);
    const MipInstance cut = AddObjectiveCutoff(mip, *opt.optimum, 0.0);
    std::set<std::vector<double>> admitted, face;
    testing::ForEachIntegerAssignment(mip, [&](std::vector<double>& x) {
      if (cut.IsFeasible(x, 1e-9)) admitted.insert(x);
      if (mip.IsFeasible(x, 1e-9) && mip.Objective(x) == *opt.optimum) face.insert(x);
    });
    EXPECT_EQ(admitted, face);
    EXPECT_FALSE(face.empty());
  }
}

// Decoded values of every feasible bit assignment of a reformulated instance.
std::set<double> DecodedValues(const MipInstance& out, const IndexMap& map) {
  std::set<double> values;
  testing::ForEachIntegerAssignment(out, [&](std::vector<double>& x) {
    std::vector<double> point = x;
    if (testing::CompleteAssignment(out, point)) values.insert(map.Decode(point)[0]);
  });
  return values;
}

MipInstance SingleInteger(double upper) {
  MipInstance mip;
  mip.variables = {{"x", 0, upper, true}};
  mip.objective = {1};
  return mip;
}

TEST(BinaryExpandTest, UpperFiveUsesThreeBits) {
  EXPECT_EQ(BinaryExpansionWidth(5), 3);
  const auto [out, map] = BinaryExpand(SingleInteger(5), std::vector<int>{0});
  ASSERT_EQ(map.expansions[0].bits.size(), 3u);
  std::vector<double> x(out.num_variables(), 0.0);
  x[map.expansions[0].bits[0]] = 1;
  x[map.expansions[0].bits[2]] = 1;
  EXPECT_EQ(map.Decode(x)[0], 5.0);
}

TEST(BinaryExpandTest, UpperOneIsReclassifiedBinary) {
  EXPECT_EQ(BinaryExpansionWidth(1), 1);
  const auto [out, map] = BinaryExpand(SingleInteger(1), std::vector<int>{0});
  EXPECT_EQ(out.num_variables(), 1);
  EXPECT_TRUE(out.variables[0].IsBinary());
  EXPECT_EQ(DecodedValues(out, map), (std::set<double>{0, 1}));
}

TEST(BinaryExpandTest, UpperTenDecodesToZeroThroughTen) {
  EXPECT_EQ(BinaryExpansionWidth(10), 4);
  const auto [out, map] = BinaryExpand(SingleInteger(10), std::vector<int>{0});
  std::set<double> expected;
  for (int v = 0; v <= 10; ++v) expected.insert(v);
  EXPECT_EQ(DecodedValues(out, map), expected);
}

TEST(BinaryExpandTest, RejectsBadTargets) {
  MipInstance mip = SingleInteger(kInf);
  EXPECT_THROW(BinaryExpand(mip, std::vector<int>{0}), ModelError);
  mip.variables[0] = {"x", -1, 4, true};
  EXPECT_THROW(BinaryExpand(mip, std::vector<int>{0}), ModelError);
}

// Feasible integer points before and after expansion agree under decoding.
TEST(BinaryExpandTest, PreservesFeasibleSet) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    MipInstance mip = MixedInstance(rng(), 3, 2, 0, 3);
    std::vector<int> targets = {3, 4};
    mip.variables[4].lower = 1;  // exercises the lower-bound row
    const auto [out, map] = BinaryExpand(mip, targets);
    std::set<std::vector<double>> before, after;
    testing::ForEachIntegerAssignment(mip, [&](std::vector<double>& x) {
      if (mip.IsFeasible(x, 1e-9)) before.insert(x);
    });
    testing::ForEachIntegerAssignment(out, [&](std::vector<double>& x) {
      std::vector<double> point = x;
      if (testing::CompleteAssignment(out, point)) {
        std::vector<double> d = map.Decode(point);
        for (double& v : d) v = std::round(v);
        after.insert(d);
      }
    });
    EXPECT_EQ(before, after) << mip.name;
  }
}

TEST(DiscretizeTest, Widths) {
  EXPECT_EQ(DiscretizationWidth(2), 7);
  EXPECT_EQ(DiscretizationWidth(1), 4);
}

TEST(DiscretizeTest, OneDigitErrorBound) {
  MipInstance mip;
  mip.variables = {{"y", 0, 1, false}};
  mip.objective = {1};
  const auto [out, map] = DiscretizeContinuous(mip, std::vector<int>{0}, 1);
  const std::set<double> grid = DecodedValues(out, map);
  EXPECT_EQ(grid.size(), 16u);
  double worst = 0.0;
  for (int i = 0; i <= 1000; ++i) {
    const double x = i / 1000.0;
    double best = 1.0;
    for (double g : grid) best = std::min(best, std::abs(g - x));
    worst = std::max(worst, best);
  }
  EXPECT_LE(worst, 1.0 / 16.0 + 1e-12);
  EXPECT_LT(worst, 0.1);
}

TEST(DiscretizeTest, GeneralRangeIsRescaled) {
  MipInstance mip;
  mip.variables = {{"y", 2, 4, false}};
  mip.objective = {1};
  const auto [out, map] = DiscretizeContinuous(mip, std::vector<int>{0}, 2);
  const std::set<double> grid = DecodedValues(out, map);
  EXPECT_EQ(grid.size(), 128u);
  EXPECT_EQ(*grid.begin(), 2.0);
  EXPECT_LT(*grid.rbegin(), 4.0);
}

TEST(DiscretizeTest, FixedAtZeroForcesZeroBits) {
  MipInstance mip;
  mip.variables = {{"y", 0, 0, false}};
  mip.objective = {1};
  const auto [out, map] = DiscretizeContinuous(mip, std::vector<int>{0}, 1);
  int feasible = 0;
  testing::ForEachIntegerAssignment(out, [&](std::vector<double>& x) {
    std::vector<double> point = x;
    if (testing::CompleteAssignment(out, point)) {
      ++feasible;
      for (int b : map.expansions[0].bits) EXPECT_EQ(x[b], 0.0);
    }
  });
  EXPECT_EQ(feasible, 1);
}

TEST(DiscretizeTest, RejectsUnbounded) {
  MipInstance mip;
  mip.variables = {{"y", 0, kInf, false}};
  mip.objective = {1};
  EXPECT_THROW(DiscretizeContinuous(mip, std::vector<int>{0}, 1), ModelError);
}

}  // namespace
}  // namespace diversitree
