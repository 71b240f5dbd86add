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

#include "mcfenum/cycle_finder.hpp"

#include <algorithm>
#include <bit>
#include <utility>

namespace mcfenum {

DfsForest BuildDfsForest(const ResidualGraph& rg) {
  const NodeId n = rg.node_count();
  DfsForest forest;
  forest.dfs_.assign(n, 0);
  forest.finish_.assign(n, 0);
  forest.parent_.assign(n, -1);
  forest.parent_arc_.assign(n, DfsForest::kNoArc);
  forest.root_.assign(n, -1);
  forest.depth_.assign(n, 0);
  forest.short_back_.assign(n, DfsForest::kNoArc);
  forest.class_.assign(rg.arc_count(), ArcClass::kCross);
  forest.order_.reserve(n);

  int discovered = 0, finished = 0;
  // (node, position in its out-arc list)
  std::vector<std::pair<NodeId, std::size_t>> stack;
  auto discover = [&](NodeId v, NodeId root) {
    forest.dfs_[v] = ++discovered;
    forest.root_[v] = root;
    forest.order_.push_back(v);
    stack.push_back({v, 0});
  };
  for (NodeId r = 0; r < n; ++r) {
    if (forest.dfs_[r] != 0) continue;
    discover(r, r);
    while (!stack.empty()) {
      auto& [u, pos] = stack.back();
      auto outs = rg.out_arcs(u);
      if (pos == outs.size()) {
        forest.finish_[u] = ++finished;
        stack.pop_back();
        continue;
      }
      const int e = outs[pos++];
      const NodeId v = rg.arc(e).dst;
      if (forest.dfs_[v] != 0) continue;
      const NodeId parent = u;
      forest.class_[e] = ArcClass::kTree;
      forest.parent_[v] = parent;
      forest.parent_arc_[v] = e;
      forest.depth_[v] = forest.depth_[parent] + 1;
      forest.short_back_[v] = rg.Partner(e);
      discover(v, r);
    }
  }

  for (int e = 0; e < rg.arc_count(); ++e) {
    if (forest.class_[e] == ArcClass::kTree) continue;
    const ResidualArc& arc = rg.arc(e);
    const NodeId i = arc.src, j = arc.dst;
    if (forest.dfs_[i] < forest.dfs_[j]) {
      forest.class_[e] = ArcClass::kForward;
    } else if (forest.IsAncestor(j, i)) {
      forest.class_[e] = e == forest.short_back_[i] ? ArcClass::kBackwardShort
                                                     : ArcClass::kBackwardLong;
    } else {
      forest.class_[e] = ArcClass::kCross;
    }
  }
  forest.sbalow_ = ComputeSbalow(forest);
  forest.BuildLcaIndex();
  return forest;
}

std::vector<int> ComputeSbalow(const DfsForest& forest) {
  std::vector<int> low(forest.node_count(), 0);
  for (NodeId v : forest.order()) {
    low[v] = forest.short_backward_arc(v) != DfsForest::kNoArc
                 ? low[forest.parent(v)]
                 : forest.dfs_number(v);
  }
  return low;
}

void DfsForest::BuildLcaIndex() {
  const NodeId n = node_count();
  std::vector<std::vector<NodeId>> children(n);
  for (NodeId v : order_) {
    if (parent_[v] >= 0) children[parent_[v]].push_back(v);
  }
  euler_.clear();
  euler_.reserve(2 * static_cast<std::size_t>(n));
  first_.assign(n, -1);
  std::vector<std::pair<NodeId, std::size_t>> stack;
  for (NodeId r : order_) {
    if (parent_[r] >= 0) continue;
    stack.push_back({r, 0});
    first_[r] = static_cast<int>(euler_.size());
    euler_.push_back(r);
    while (!stack.empty()) {
      auto& [u, pos] = stack.back();
      if (pos == children[u].size()) {
        stack.pop_back();
        if (!stack.empty()) euler_.push_back(stack.back().first);
        continue;
      }
      NodeId c = children[u][pos++];
      first_[c] = static_cast<int>(euler_.size());
      euler_.push_back(c);
      stack.push_back({c, 0});
    }
  }
  const std::size_t len = euler_.size();
  sparse_.clear();
  if (len == 0) return;
  sparse_.push_back(std::vector<int>(len));
  for (std::size_t k = 0; k < len; ++k) sparse_[0][k] = static_cast<int>(k);
  for (std::size_t level = 1; (std::size_t{1} << level) <= len; ++level) {
    const std::size_t half = std::size_t{1} << (level - 1);
    const std::size_t width = len - (std::size_t{1} << level) + 1;
    std::vector<int> row(width);
    for (std::size_t k = 0; k < width; ++k) {
      int x = sparse_[level - 1][k], y = sparse_[level - 1][k + half];
      row[k] = depth_[euler_[x]] <= depth_[euler_[y]] ? x : y;
    }
    sparse_.push_back(std::move(row));
  }
}

NodeId DfsForest::Lca(NodeId i, NodeId j) const {
  if (root_[i] != root_[j]) {
    throw FlowError(ErrorCode::kDifferentTrees,
                    "nodes " + std::to_string(i) + " and " + std::to_string(j) +
                        " lie in different DFS trees");
  }
  std::size_t l = first_[i], r = first_[j];
  if (l > r) std::swap(l, r);
  const int level = std::bit_width(r - l + 1) - 1;
  int x = sparse_[level][l];
  int y = sparse_[level][r + 1 - (std::size_t{1} << level)];
  return depth_[euler_[x]] <= depth_[euler_[y]] ? euler_[x] : euler_[y];
}

NodeId Lca(const DfsForest& forest, NodeId i, NodeId j) {
  return forest.Lca(i, j);
}

namespace {

// Tree arcs from `top` down to `bottom`; top must be an ancestor of bottom.
void AppendTreePath(const ResidualGraph& rg, const DfsForest& forest,
                    NodeId top, NodeId bottom, Cycle& out) {
  std::vector<int> arcs;
  for (NodeId v = bottom; v != top; v = forest.parent(v)) {
    arcs.push_back(forest.parent_arc(v));
  }
  for (auto it = arcs.rbegin(); it != arcs.rend(); ++it) {
    out.arcs.push_back(rg.arc(*it));
  }
}

// Short backward arcs from `bottom` up to `top`.
void AppendShortBackwardPath(const ResidualGraph& rg, const DfsForest& forest,
                             NodeId bottom, NodeId top, Cycle& out) {
  for (NodeId v = bottom; v != top; v = forest.parent(v)) {
    out.arcs.push_back(rg.arc(forest.short_backward_arc(v)));
  }
}

}  // namespace

std::optional<Cycle> FindProperCycle(const ResidualGraph& rg,
                                     const DfsForest& forest) {
  const std::vector<NodeId>& order = forest.order();
  auto scan = [&](ArcClass wanted, auto&& build) -> std::optional<Cycle> {
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      for (int e : rg.out_arcs(*it)) {
        if (forest.arc_class(e) != wanted) continue;
        if (auto c = build(e)) return c;
      }
    }
    return std::nullopt;
  };

  auto backward = scan(ArcClass::kBackwardLong, [&](int e) -> std::optional<Cycle> {
    const ResidualArc& arc = rg.arc(e);
    Cycle c;
    AppendTreePath(rg, forest, arc.dst, arc.src, c);
    c.arcs.push_back(arc);
    return c;
  });
  if (backward) return backward;

  auto forward = scan(ArcClass::kForward, [&](int e) -> std::optional<Cycle> {
    const ResidualArc& arc = rg.arc(e);
    if (forest.sbalow(arc.dst) > forest.dfs_number(arc.src)) return std::nullopt;
    Cycle c;
    c.arcs.push_back(arc);
    AppendShortBackwardPath(rg, forest, arc.dst, arc.src, c);
    return c;
  });
  if (forward) return forward;

  return scan(ArcClass::kCross, [&](int e) -> std::optional<Cycle> {
    const ResidualArc& arc = rg.arc(e);
    // Arcs between different trees never lie on a cycle.
    if (forest.root_of(arc.src) != forest.root_of(arc.dst)) return std::nullopt;
    const NodeId a = forest.Lca(arc.src, arc.dst);
    if (forest.sbalow(arc.dst) > forest.dfs_number(a)) return std::nullopt;
    Cycle c;
    c.arcs.push_back(arc);
    AppendShortBackwardPath(rg, forest, arc.dst, a, c);
    AppendTreePath(rg, forest, a, arc.src, c);
    return c;
  });
}

std::optional<Cycle> FindProperCycle(const ResidualGraph& rg) {
  return FindProperCycle(rg, BuildDfsForest(rg));
}

std::optional<Flow> FindAnotherFeasibleFlow(const Network& net, const Flow& f) {
  ResidualGraph rg = BuildResidual(net, f);
  std::optional<Cycle> c = FindProperCycle(rg);
  if (!c) return std::nullopt;
  return Augment(f, *c, 1);
}

}  // namespace mcfenum
