// Copyright 2026 The mcfenum Authors
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

#ifndef MCFENUM_CYCLE_FINDER_HPP_
#define MCFENUM_CYCLE_FINDER_HPP_

#include <optional>
#include <vector>

#include "mcfenum/network.hpp"
#include "mcfenum/residual.hpp"

namespace mcfenum {

enum class ArcClass { kTree, kForward, kBackwardShort, kBackwardLong, kCross };

// DFS forest over a residual graph.
//
// Roots are taken in ascending node id, out-arcs in residual order. A
// backward arc (i, j) is short when it is the symmetric partner of the tree
// arc entering i (so j is the DFS parent of i); every other backward arc is
// long. In a graph without parallel arcs this is the plain "j == parent(i)"
// rule; with parallel arcs, a backward arc to the parent from a different
// origin closes a proper 2-cycle with the tree arc and is treated as long.
class DfsForest {
 public:
  static constexpr int kNoArc = -1;

  NodeId node_count() const { return static_cast<NodeId>(dfs_.size()); }
  // Discovery number in 1..n.
  int dfs_number(NodeId v) const { return dfs_[v]; }
  int finish_number(NodeId v) const { return finish_[v]; }
  // DFS parent, or -1 for roots.
  NodeId parent(NodeId v) const { return parent_[v]; }
  // Residual arc index of the tree arc entering v, or kNoArc for roots.
  int parent_arc(NodeId v) const { return parent_arc_[v]; }
  NodeId root_of(NodeId v) const { return root_[v]; }
  // Nodes in discovery order.
  const std::vector<NodeId>& order() const { return order_; }
  ArcClass arc_class(int residual_arc) const { return class_[residual_arc]; }
  const std::vector<ArcClass>& arc_classes() const { return class_; }
  // Smallest dfs number reachable from v using short backward arcs only.
  int sbalow(NodeId v) const { return sbalow_[v]; }
  const std::vector<int>& sbalows() const { return sbalow_; }
  // Residual arc index of the short backward arc leaving v, or kNoArc.
  int short_backward_arc(NodeId v) const { return short_back_[v]; }

  // Interval test on (discovery, finish) numbers.
  bool IsAncestor(NodeId ancestor, NodeId v) const {
    return dfs_[ancestor] <= dfs_[v] && finish_[v] <= finish_[ancestor];
  }

  // Lowest common ancestor in O(1) via an Euler tour and a sparse table.
  // Throws kDifferentTrees if i and j lie in different DFS trees.
  NodeId Lca(NodeId i, NodeId j) const;

  friend DfsForest BuildDfsForest(const ResidualGraph& rg);

 private:
  void BuildLcaIndex();

  std::vector<int> dfs_;
  std::vector<int> finish_;
  std::vector<NodeId> parent_;
  std::vector<int> parent_arc_;
  std::vector<NodeId> root_;
  std::vector<NodeId> order_;
  std::vector<ArcClass> class_;
  std::vector<int> sbalow_;
  std::vector<int> short_back_;
  std::vector<int> depth_;
  // Euler tour of every tree, concatenated; first_ maps node -> position.
  std::vector<NodeId> euler_;
  std::vector<int> first_;
  std::vector<std::vector<int>> sparse_;
};

DfsForest BuildDfsForest(const ResidualGraph& rg);

// SBAlow values for a forest whose parent links and short backward arcs are
// fixed: sbalow(i) = sbalow(parent(i)) when i has a short backward arc,
// dfs(i) otherwise. Nodes are processed in discovery order so the parent is
// always done first.
std::vector<int> ComputeSbalow(const DfsForest& forest);

NodeId Lca(const DfsForest& forest, NodeId i, NodeId j);

// One proper cycle of rg, or nullopt iff rg has none. Checks long backward
// arcs, then forward arcs, then cross arcs. Within each class, arcs are
// scanned by tail in decreasing dfs number, then in residual order.
std::optional<Cycle> FindProperCycle(const ResidualGraph& rg);
std::optional<Cycle> FindProperCycle(const ResidualGraph& rg,
                                     const DfsForest& forest);

// f + chi(C) for a proper cycle C of D_f, or nullopt if f is the only
// feasible flow. Throws kInfeasibleFlow if f is not feasible.
std::optional<Flow> FindAnotherFeasibleFlow(const Network& net, const Flow& f);

}  // namespace mcfenum

#endif  // MCFENUM_CYCLE_FINDER_HPP_
