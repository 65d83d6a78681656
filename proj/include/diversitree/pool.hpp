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

#ifndef DIVERSITREE_POOL_HPP_
#define DIVERSITREE_POOL_HPP_

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace diversitree {

inline constexpr std::size_t kUnlimited = std::numeric_limits<std::size_t>::max();

struct Solution {
  std::vector<double> values;  // full vector in model space
  double objective = 0.0;      // minimization sense
};

// The near-optimal pool collected by branch-and-count, in discovery order.
// With dedup on, a solution whose rounded binary projection is already present
// is rejected. Per-binary counts of ones are kept so partial diversity of a
// node can be evaluated in O(|fixed binaries|).
class SolutionPool {
 public:
  SolutionPool() = default;
  SolutionPool(std::vector<int> binary_indices, std::size_t capacity, bool dedup)
      : binary_indices_(std::move(binary_indices)),
        capacity_(capacity),
        dedup_(dedup),
        ones_(binary_indices_.size(), 0) {}

  std::size_t size() const { return solutions_.size(); }
  bool empty() const { return solutions_.empty(); }
  std::size_t capacity() const { return capacity_; }
  bool full() const { return solutions_.size() >= capacity_; }
  bool dedup() const { return dedup_; }
  const std::vector<int>& binary_indices() const { return binary_indices_; }
  const std::vector<Solution>& solutions() const { return solutions_; }
  const Solution& operator[](std::size_t i) const { return solutions_[i]; }

  // Number of stored solutions with a one at binary position `pos`.
  std::int64_t ones(std::size_t pos) const { return ones_[pos]; }

  std::vector<std::uint8_t> Project(std::span<const double> values) const {
    std::vector<std::uint8_t> bits(binary_indices_.size());
    for (std::size_t k = 0; k < binary_indices_.size(); ++k) {
      bits[k] = std::round(values[binary_indices_[k]]) >= 1.0 ? 1 : 0;
    }
    return bits;
  }

  std::vector<std::uint8_t> Projection(std::size_t i) const {
    return Project(solutions_[i].values);
  }

  bool Contains(std::span<const double> values) const {
    return seen_.count(Key(Project(values))) > 0;
  }

  // Returns false when the pool is full or the solution is a duplicate.
  bool Add(Solution solution) {
    if (full()) return false;
    auto bits = Project(solution.values);
    std::string key = Key(bits);
    if (dedup_ && seen_.count(key)) return false;
    for (std::size_t k = 0; k < bits.size(); ++k) ones_[k] += bits[k];
    seen_.insert(std::move(key));
    for (double& v : solution.values) v += 0.0;  // no negative zeros in output
    solutions_.push_back(std::move(solution));
    return true;
  }

 private:
  static std::string Key(const std::vector<std::uint8_t>& bits) {
    return std::string(bits.begin(), bits.end());
  }

  std::vector<int> binary_indices_;
  std::size_t capacity_ = kUnlimited;
  bool dedup_ = true;
  std::vector<Solution> solutions_;
  std::vector<std::int64_t> ones_;
  std::unordered_set<std::string> seen_;
};

}  // namespace diversitree

#endif  // DIVERSITREE_POOL_HPP_
