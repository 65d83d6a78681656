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

#ifndef DIVERSITREE_DIVERSITY_HPP_
#define DIVERSITREE_DIVERSITY_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "diversitree/error.hpp"
#include "diversitree/model.hpp"
#include "diversitree/pool.hpp"

namespace diversitree {

// Rounded 0/1 values over B in index order.
using BinaryProjection = std::vector<std::uint8_t>;

inline std::vector<BinaryProjection> Projections(const SolutionPool& pool) {
  std::vector<BinaryProjection> out;
  out.reserve(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) out.push_back(pool.Projection(i));
  return out;
}

inline std::int64_t HammingCount(const BinaryProjection& a, const BinaryProjection& b) {
  Expects(a.size() == b.size(), "hamming distance of projections with different lengths");
  std::int64_t n = 0;
  for (std::size_t k = 0; k < a.size(); ++k) n += a[k] != b[k];
  return n;
}

// Scaled Hamming distance; 0 for empty projections.
inline double Ham(const BinaryProjection& a, const BinaryProjection& b) {
  const std::int64_t n = HammingCount(a, b);
  return a.empty() ? 0.0 : static_cast<double>(n) / static_cast<double>(a.size());
}

// Sum of pairwise Hamming counts via per-bit column counts.
inline std::int64_t PairwiseHammingSum(std::span<const BinaryProjection> set) {
  if (set.empty()) return 0;
  const std::size_t width = set.front().size();
  const auto n = static_cast<std::int64_t>(set.size());
  std::int64_t total = 0;
  for (std::size_t k = 0; k < width; ++k) {
    std::int64_t ones = 0;
    for (const auto& v : set) {
      Expects(v.size() == width, "projections of different lengths");
      ones += v[k];
    }
    total += ones * (n - ones);
  }
  return total;
}

// Average scaled Hamming distance over unordered pairs. Needs |S| >= 2.
inline double Dbin(std::span<const BinaryProjection> set) {
  if (set.size() < 2) throw UndefinedInput("DBin needs at least two solutions");
  const std::size_t width = set.front().size();
  if (width == 0) return 0.0;
  const double pairs = 0.5 * static_cast<double>(set.size()) * static_cast<double>(set.size() - 1);
  return static_cast<double>(PairwiseHammingSum(set)) / (pairs * static_cast<double>(width));
}

// Reporting form: 0 for sets smaller than two.
inline double DbinOrZero(std::span<const BinaryProjection> set) {
  return set.size() < 2 ? 0.0 : Dbin(set);
}

enum class DallNormalization {
  kPerVariable,  // mean over variables with positive range
  kLiteral,      // sum over variables divided by |S|
};

// Mean of range-scaled population variances. Variables with R_i <= 0 are skipped.
inline double Dall(std::span<const std::vector<double>> set, std::span<const double> ranges,
                   DallNormalization norm = DallNormalization::kPerVariable) {
  if (set.size() < 2) throw UndefinedInput("DAll needs at least two solutions");
  const std::size_t d = ranges.size();
  const double n = static_cast<double>(set.size());
  double total = 0.0;
  std::size_t included = 0;
  for (std::size_t i = 0; i < d; ++i) {
    if (!(ranges[i] > 0.0) || !std::isfinite(ranges[i])) continue;
    double mean = 0.0;
    for (const auto& x : set) mean += x[i];
    mean /= n;
    double var = 0.0;
    for (const auto& x : set) var += (x[i] - mean) * (x[i] - mean);
    var /= n;
    total += var / ranges[i];
    ++included;
  }
  if (included == 0) throw UndefinedInput("DAll needs a variable with positive range");
  return norm == DallNormalization::kPerVariable ? total / static_cast<double>(included)
                                                 : total / n;
}

// R_i from the model bounds; infinite ranges fall back to the spread observed
// in `set` (0 if none).
inline std::vector<double> VariableRanges(const MipInstance& instance,
                                          std::span<const std::vector<double>> set = {}) {
  std::vector<double> ranges;
  for (int j = 0; j < instance.num_variables(); ++j) {
    const VariableDef& v = instance.variables[j];
    double r = v.upper - v.lower;
    if (!std::isfinite(r)) {
      r = 0.0;
      if (!set.empty()) {
        const auto [lo, hi] = std::minmax_element(
            set.begin(), set.end(), [j](const auto& a, const auto& b) { return a[j] < b[j]; });
        r = (*hi)[j] - (*lo)[j];
      }
    }
    ranges.push_back(r);
  }
  return ranges;
}

struct DiversityReport {
  double dbin = 0.0;
  std::optional<double> dall;
  std::int64_t pair_count = 0;
  std::size_t set_size = 0;
};

inline DiversityReport Report(std::span<const BinaryProjection> projections,
                              std::span<const std::vector<double>> full = {},
                              std::span<const double> ranges = {}) {
  DiversityReport r;
  r.set_size = projections.size();
  r.pair_count = static_cast<std::int64_t>(r.set_size) * (static_cast<std::int64_t>(r.set_size) - 1) / 2;
  r.dbin = DbinOrZero(projections);
  if (full.size() >= 2 && !ranges.empty()) {
    try {
      r.dall = Dall(full, ranges);
    } catch (const UndefinedInput&) {
      r.dall.reset();
    }
  }
  return r;
}

}  // namespace diversitree

#endif  // DIVERSITREE_DIVERSITY_HPP_
