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

#ifndef DIVERSITREE_NODE_HPP_
#define DIVERSITREE_NODE_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <utility>
#include <vector>

#include "diversitree/error.hpp"
#include "diversitree/relaxation.hpp"
#include "diversitree/simplex.hpp"

namespace diversitree {

using NodeId = std::int64_t;
inline constexpr NodeId kNoParent = -1;

struct FixedBinary {
  int position = 0;  // index into the instance's binary index list B
  std::uint8_t value = 0;

  friend bool operator==(const FixedBinary&, const FixedBinary&) = default;
};

// An open subproblem of the search tree. The LP is solved when the node is
// created, so lp_bound is the node's own relaxation value.
struct Node {
  NodeId id = 0;
  NodeId parent_id = kNoParent;
  int depth = 0;
  LocalBounds bounds;
  double lp_bound = 0.0;
  LpStatus lp_status = LpStatus::kStalled;
  std::vector<double> lp_primal;
  std::vector<int> fractional_vars;
  double estimate = 0.0;  // best-solution estimate used by the hybrid rule
  std::vector<FixedBinary> fixed_binaries;
  std::shared_ptr<const Basis> basis;
};

// Binaries of `binary_indices` whose local bounds coincide.
inline std::vector<FixedBinary> FixedBinariesOf(const LocalBounds& bounds,
                                                const std::vector<int>& binary_indices) {
  std::vector<FixedBinary> out;
  for (std::size_t k = 0; k < binary_indices.size(); ++k) {
    const int j = binary_indices[k];
    if (bounds.lower[j] == bounds.upper[j]) {
      out.push_back({static_cast<int>(k), static_cast<std::uint8_t>(bounds.lower[j] >= 0.5)});
    }
  }
  return out;
}

// Open nodes keyed by id, with the extrema of their LP bounds.
class OpenNodeQueue {
 public:
  bool empty() const { return nodes_.empty(); }
  std::size_t size() const { return nodes_.size(); }
  const std::map<NodeId, Node>& nodes() const { return nodes_; }
  const Node& at(NodeId id) const { return nodes_.at(id); }

  double min_bound() const {
    Expects(!empty(), "bound extrema of an empty queue");
    return *bounds_.begin();
  }
  double max_bound() const {
    Expects(!empty(), "bound extrema of an empty queue");
    return *bounds_.rbegin();
  }

  void Push(Node node) {
    bounds_.insert(node.lp_bound);
    const NodeId id = node.id;
    nodes_.emplace(id, std::move(node));
  }

  Node Pop(NodeId id) {
    auto it = nodes_.find(id);
    Expects(it != nodes_.end(), "dequeue of a node that is not open");
    Node node = std::move(it->second);
    nodes_.erase(it);
    bounds_.erase(bounds_.find(node.lp_bound));
    return node;
  }

 private:
  std::map<NodeId, Node> nodes_;
  std::multiset<double> bounds_;
};

}  // namespace diversitree

#endif  // DIVERSITREE_NODE_HPP_
