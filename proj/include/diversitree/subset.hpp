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

#ifndef DIVERSITREE_SUBSET_HPP_
#define DIVERSITREE_SUBSET_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "diversitree/diversity.hpp"
#include "diversitree/error.hpp"

namespace diversitree {

enum class SubsetMethod { kGreedy, kGreedySwap, kExact };

inline std::string_view SubsetMethodName(SubsetMethod m) {
  switch (m) {
    case SubsetMethod::kGreedy:
      return "greedy";
    case SubsetMethod::kGreedySwap:
      return "greedySwap";
    case SubsetMethod::kExact:
      return "exact";
  }
  return "unknown";
}

inline SubsetMethod ParseSubsetMethod(std::string_view text) {
  if (text == "greedy") return SubsetMethod::kGreedy;
  if (text == "greedySwap" || text == "greedy-swap" || text == "swap") return SubsetMethod::kGreedySwap;
  if (text == "exact") return SubsetMethod::kExact;
  throw ContractViolation("unknown subset method '" + std::string(text) + "'");
}

inline constexpr double kExactSubsetLimit = 2e6;

// C(n, k) as a double, enough to compare against the exact limit.
inline double Binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (std::size_t i = 1; i <= k; ++i) c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
  return c;
}

// Pairwise Hamming counts of a candidate set, row-major.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(std::span<const BinaryProjection> items)
      : n_(items.size()), width_(items.empty() ? 0 : items.front().size()), d_(n_ * n_, 0) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        d_[i * n_ + j] = d_[j * n_ + i] = HammingCount(items[i], items[j]);
      }
    }
  }

  std::size_t size() const { return n_; }
  std::size_t width() const { return width_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }

  std::int64_t PairSum(std::span<const std::size_t> members) const {
    std::int64_t total = 0;
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) total += (*this)(members[a], members[b]);
    }
    return total;
  }

  // Pair-sum in units of scaled Hamming distance.
  double Scaled(std::int64_t count) const {
    return width_ == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(width_);
  }

 private:
  std::size_t n_;
  std::size_t width_;
  std::vector<std::int64_t> d_;
};

// A subset with each candidate's summed distance to it kept current.
class SubsetState {
 public:
  SubsetState(const DistanceMatrix& dist, std::span<const std::size_t> members)
      : dist_(&dist), in_(dist.size(), 0), to_set_(dist.size(), 0) {
    for (std::size_t m : members) Insert(m);
  }

  const std::vector<std::size_t>& members() const { return members_; }
  bool contains(std::size_t i) const { return in_[i] != 0; }
  std::int64_t pair_sum() const { return pair_sum_; }
  std::int64_t distance_to_set(std::size_t i) const { return to_set_[i]; }

  // Change in the pair-sum (Hamming counts) if `out` is replaced by `in`.
  std::int64_t DeltaCount(std::size_t out, std::size_t in) const {
    Expects(out < in_.size() && in < in_.size(), "subset index out of range");
    Expects(contains(out), "swap-out index is not in the subset");
    Expects(!contains(in), "swap-in index is already in the subset");
    return to_set_[in] - (*dist_)(in, out) - to_set_[out];
  }

  void Insert(std::size_t i) {
    Expects(!contains(i), "duplicate subset member");
    pair_sum_ += to_set_[i];
    in_[i] = 1;
    members_.push_back(i);
    for (std::size_t k = 0; k < to_set_.size(); ++k) to_set_[k] += (*dist_)(k, i);
  }

  void Swap(std::size_t out, std::size_t in) {
    pair_sum_ += DeltaCount(out, in);
    in_[out] = 0;
    in_[in] = 1;
    *std::find(members_.begin(), members_.end(), out) = in;
    for (std::size_t k = 0; k < to_set_.size(); ++k) {
      to_set_[k] += (*dist_)(k, in) - (*dist_)(k, out);
    }
  }

 private:
  const DistanceMatrix* dist_;
  std::vector<std::uint8_t> in_;
  std::vector<std::int64_t> to_set_;
  std::vector<std::size_t> members_;
  std::int64_t pair_sum_ = 0;
};

// Change in sum-of-pairwise-ham of swapping `out` for `in`.
inline double DbinDelta(const SubsetState& state, const DistanceMatrix& dist, std::size_t out,
                        std::size_t in) {
  return dist.Scaled(state.DeltaCount(out, in));
}

struct SubsetResult {
  std::vector<std::size_t> indices;  // ascending
  std::int64_t pair_sum = 0;         // Hamming counts
  double dbin = 0.0;
  int swaps = 0;
};

namespace subset_internal {

inline SubsetResult Finish(const DistanceMatrix& dist, std::vector<std::size_t> members,
                           int swaps = 0) {
  std::sort(members.begin(), members.end());
  SubsetResult r;
  r.pair_sum = dist.PairSum(members);
  const double pairs = 0.5 * static_cast<double>(members.size()) * (members.size() - 1.0);
  r.dbin = pairs > 0 && dist.width() > 0 ? dist.Scaled(r.pair_sum) / pairs : 0.0;
  r.indices = std::move(members);
  r.swaps = swaps;
  return r;
}

inline std::vector<std::size_t> GreedyMembers(const DistanceMatrix& dist, std::size_t p) {
  const std::size_t n = dist.size();
  std::size_t a = 0;
  std::size_t b = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (dist(i, j) > dist(a, b)) {
        a = i;
        b = j;
      }
    }
  }
  SubsetState state(dist, std::vector<std::size_t>{a, b});
  while (state.members().size() < p) {
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (state.contains(i)) continue;
      if (pick == n || state.distance_to_set(i) > state.distance_to_set(pick)) pick = i;
    }
    state.Insert(pick);
  }
  std::vector<std::size_t> greedy = state.members();
  // Never worse than simply keeping the first p solutions.
  std::vector<std::size_t> prefix(p);
  std::iota(prefix.begin(), prefix.end(), 0);
  if (dist.PairSum(prefix) > dist.PairSum(greedy)) return prefix;
  return greedy;
}

}  // namespace subset_internal

inline SubsetResult SelectDiverseSubset(std::span<const BinaryProjection> pool, std::size_t p,
                                        SubsetMethod method) {
  const std::size_t n = pool.size();
  Expects(p >= 2 && p <= n, "subset size p must satisfy 2 <= p <= |pool|");
  const DistanceMatrix dist(pool);
  switch (method) {
    case SubsetMethod::kGreedy:
      return subset_internal::Finish(dist, subset_internal::GreedyMembers(dist, p));
    case SubsetMethod::kGreedySwap: {
      SubsetState state(dist, subset_internal::GreedyMembers(dist, p));
      int swaps = 0;
      const int cap = static_cast<int>(50 * p);
      while (swaps < cap) {
        std::int64_t best = 0;
        std::size_t best_out = n;
        std::size_t best_in = n;
        std::vector<std::size_t> members = state.members();
        std::sort(members.begin(), members.end());
        for (std::size_t out : members) {
          for (std::size_t in = 0; in < n; ++in) {
            if (state.contains(in)) continue;
            const std::int64_t delta = state.DeltaCount(out, in);
            if (delta > best) {
              best = delta;
              best_out = out;
              best_in = in;
            }
          }
        }
        if (best_out == n) break;
        state.Swap(best_out, best_in);
        ++swaps;
      }
      return subset_internal::Finish(dist, state.members(), swaps);
    }
    case SubsetMethod::kExact: {
      if (Binomial(n, p) > kExactSubsetLimit) {
        throw ContractViolation("exact subset selection over C(" + std::to_string(n) + ", " +
                                std::to_string(p) + ") subsets exceeds the limit");
      }
      std::vector<std::size_t> combo(p);
      std::iota(combo.begin(), combo.end(), 0);
      std::vector<std::size_t> best = combo;
      std::int64_t best_sum = dist.PairSum(combo);
      for (;;) {
        std::size_t k = p;
        while (k > 0 && combo[k - 1] == n - p + k - 1) --k;
        if (k == 0) break;
        ++combo[k - 1];
        for (std::size_t t = k; t < p; ++t) combo[t] = combo[t - 1] + 1;
        const std::int64_t s = dist.PairSum(combo);
        if (s > best_sum) {
          best_sum = s;
          best = combo;
        }
      }
      return subset_internal::Finish(dist, best);
    }
  }
  throw ContractViolation("unknown subset method");
}

}  // namespace diversitree

#endif  // DIVERSITREE_SUBSET_HPP_
