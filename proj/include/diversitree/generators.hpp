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

// Seeded desk-scale instance families. All data is integral except the
// subcube family's small objective weights.

#ifndef DIVERSITREE_GENERATORS_HPP_
#define DIVERSITREE_GENERATORS_HPP_

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "diversitree/error.hpp"
#include "diversitree/model.hpp"

namespace diversitree {

namespace generators_internal {

inline int Uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline std::string Indexed(std::string_view prefix, int i) {
  return std::string(prefix) + std::to_string(i);
}

}  // namespace generators_internal

// max profit . x subject to m knapsack rows, stored negated. A narrow profit
// range leaves many solutions close to the optimum.
inline MipInstance MultiKnapsack(std::uint64_t seed, int n, int m, int profit_lo = 1,
                                 int profit_hi = 20) {
  using generators_internal::Indexed;
  using generators_internal::Uniform;
  std::mt19937_64 rng(seed);
  MipInstance mip;
  mip.name = "knap_" + std::to_string(n) + "x" + std::to_string(m) + "_s" + std::to_string(seed);
  mip.maximize = true;
  for (int j = 0; j < n; ++j) {
    mip.variables.push_back({Indexed("x", j), 0, 1, true});
    mip.objective.push_back(-Uniform(rng, profit_lo, profit_hi));
  }
  for (int i = 0; i < m; ++i) {
    std::vector<Term> terms;
    double total = 0.0;
    for (int j = 0; j < n; ++j) {
      const int w = Uniform(rng, 1, 15);
      terms.push_back({j, static_cast<double>(w)});
      total += w;
    }
    mip.constraints.push_back(MakeConstraint(Indexed("cap", i), std::move(terms),
                                             RowSense::kLessEqual, std::floor(total / 2)));
  }
  return mip;
}

// min cost . x, every row covered at least once.
inline MipInstance SetCover(std::uint64_t seed, int n, int m) {
  using generators_internal::Indexed;
  using generators_internal::Uniform;
  std::mt19937_64 rng(seed);
  MipInstance mip;
  mip.name = "cover_" + std::to_string(n) + "x" + std::to_string(m) + "_s" + std::to_string(seed);
  for (int j = 0; j < n; ++j) {
    mip.variables.push_back({Indexed("x", j), 0, 1, true});
    mip.objective.push_back(Uniform(rng, 1, 9));
  }
  for (int i = 0; i < m; ++i) {
    std::vector<Term> terms;
    for (int j = 0; j < n; ++j) {
      if (Uniform(rng, 0, 2) == 0) terms.push_back({j, 1.0});
    }
    if (terms.empty()) terms.push_back({Uniform(rng, 0, n - 1), 1.0});
    mip.constraints.push_back(
        MakeConstraint(Indexed("cover", i), std::move(terms), RowSense::kGreaterEqual, 1));
  }
  return mip;
}

// Binaries, small general integers and continuous variables with linking
// rows. Built around a feasible integer point.
inline MipInstance MixedInstance(std::uint64_t seed, int binaries, int integers, int continuous,
                                 int rows) {
  using generators_internal::Indexed;
  using generators_internal::Uniform;
  std::mt19937_64 rng(seed);
  MipInstance mip;
  mip.name = "mixed_" + std::to_string(binaries) + "_" + std::to_string(integers) + "_" +
             std::to_string(continuous) + "_s" + std::to_string(seed);
  std::vector<double> point;
  for (int j = 0; j < binaries; ++j) {
    mip.variables.push_back({Indexed("b", j), 0, 1, true});
    point.push_back(Uniform(rng, 0, 1));
  }
  for (int j = 0; j < integers; ++j) {
    mip.variables.push_back({Indexed("g", j), 0, 3, true});
    point.push_back(Uniform(rng, 0, 3));
  }
  for (int j = 0; j < continuous; ++j) {
    mip.variables.push_back({Indexed("y", j), 0, 5, false});
    point.push_back(Uniform(rng, 0, 10) / 2.0);
  }
  const int d = mip.num_variables();
  for (int j = 0; j < d; ++j) mip.objective.push_back(Uniform(rng, -6, 6));
  for (int i = 0; i < rows; ++i) {
    std::vector<Term> terms;
    double activity = 0.0;
    for (int j = 0; j < d; ++j) {
      if (Uniform(rng, 0, 2) == 0) continue;
      const int a = Uniform(rng, -4, 4);
      if (a == 0) continue;
      terms.push_back({j, static_cast<double>(a)});
      activity += a * point[j];
    }
    if (terms.empty()) continue;
    const bool le = Uniform(rng, 0, 1) == 0;
    const double slack = Uniform(rng, 0, 3);
    mip.constraints.push_back(MakeConstraint(
        Indexed("r", i), std::move(terms), le ? RowSense::kLessEqual : RowSense::kGreaterEqual,
        le ? std::ceil(activity + slack) : std::floor(activity - slack)));
  }
  return mip;
}

// Two clusters of binary solutions far apart in Hamming distance. With z = 0
// at most k of x are one; with z = 1 at least n - k are. The fixed variable w
// carries a constant 100 so the relative cutoff has room; every member of
// both clusters lies within 5% of the optimum, and all of the z = 0 cluster
// is cheaper than any z = 1 solution.
inline MipInstance ComplementarySubcubes(std::uint64_t seed, int n, int k) {
  using generators_internal::Indexed;
  using generators_internal::Uniform;
  Expects(n >= 2 && k >= 0 && 2 * k < n, "subcube family needs 0 <= 2k < n");
  std::mt19937_64 rng(seed);
  MipInstance mip;
  mip.name = "subcubes_" + std::to_string(n) + "_" + std::to_string(k) + "_s" + std::to_string(seed);
  std::vector<Term> sum_x;
  for (int j = 0; j < n; ++j) {
    mip.variables.push_back({Indexed("x", j), 0, 1, true});
    mip.objective.push_back(Uniform(rng, 1, 20) / 100.0);
    sum_x.push_back({j, 1.0});
  }
  const int z = n;
  mip.variables.push_back({"z", 0, 1, true});
  mip.objective.push_back(1.0);
  mip.variables.push_back({"w", 1, 1, false});
  mip.objective.push_back(100.0);

  std::vector<Term> upper = sum_x;
  upper.push_back({z, -static_cast<double>(n)});
  mip.constraints.push_back(MakeConstraint("low_side", std::move(upper), RowSense::kLessEqual, k));
  std::vector<Term> lower = sum_x;
  lower.push_back({z, -static_cast<double>(n - k)});
  mip.constraints.push_back(
      MakeConstraint("high_side", std::move(lower), RowSense::kGreaterEqual, 0));
  return mip;
}

}  // namespace diversitree

#endif  // DIVERSITREE_GENERATORS_HPP_
