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

#include "mcfenum/bounds.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <string>
#include <tuple>

#include "mcfenum/mcf.hpp"

namespace mcfenum {
namespace {

class UnionFind {
 public:
  explicit UnionFind(NodeId n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  NodeId Find(NodeId v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }
  bool Union(NodeId a, NodeId b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    return true;
  }

 private:
  std::vector<NodeId> parent_;
  std::vector<NodeId> size_;
};

bool IsFree(const Arc& arc, Value v) { return arc.lower < v && v < arc.upper; }

Value SaturatingAdd(Value a, Value b) {
  Value out;
  return __builtin_add_overflow(a, b, &out) ? kInfinity : out;
}

Value SaturatingMul(Value a, Value b) {
  Value out;
  return __builtin_mul_overflow(a, b, &out) ? kInfinity : out;
}

// Signed arcs of the path from `from` to `to` in the forest given by
// `forest_arcs`, or empty if there is none.
std::vector<SignedArc> ForestPath(const Network& net,
                                  const std::vector<ArcId>& forest_arcs,
                                  NodeId from, NodeId to) {
  std::vector<std::vector<ArcId>> adj(net.node_count());
  for (ArcId a : forest_arcs) {
    adj[net.arc(a).src].push_back(a);
    adj[net.arc(a).dst].push_back(a);
  }
  std::vector<ArcId> via(net.node_count(), -1);
  std::vector<bool> seen(net.node_count(), false);
  std::queue<NodeId> queue;
  queue.push(from);
  seen[from] = true;
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop();
    if (v == to) break;
    for (ArcId a : adj[v]) {
      const Arc& arc = net.arc(a);
      const NodeId w = arc.src == v ? arc.dst : arc.src;
      if (seen[w]) continue;
      seen[w] = true;
      via[w] = a;
      queue.push(w);
    }
  }
  std::vector<SignedArc> path;
  if (!seen[to]) return path;
  for (NodeId v = to; v != from;) {
    const Arc& arc = net.arc(via[v]);
    const bool along = arc.dst == v;
    path.push_back({via[v], along ? 1 : -1});
    v = along ? arc.src : arc.dst;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

// Cancels cycles of free arcs until the free arcs form a forest. Every step
// moves at least one arc to a bound, where it stays.
void CancelFreeCycles(const Network& net, Flow& f) {
  for (;;) {
    UnionFind uf(net.node_count());
    std::vector<ArcId> forest;
    ArcId closing = -1;
    for (ArcId a = 0; a < net.arc_count(); ++a) {
      const Arc& arc = net.arc(a);
      if (!IsFree(arc, f[a])) continue;
      if (uf.Union(arc.src, arc.dst)) {
        forest.push_back(a);
      } else {
        closing = a;
        break;
      }
    }
    if (closing < 0) return;
    const Arc& arc = net.arc(closing);
    std::vector<SignedArc> cycle{{closing, 1}};
    for (const SignedArc& s : ForestPath(net, forest, arc.dst, arc.src)) {
      cycle.push_back(s);
    }
    Value cost = 0;
    for (const SignedArc& s : cycle) {
      cost = CheckedAdd(cost, s.sign * net.arc(s.arc).cost);
    }
    const int flip = cost > 0 ? -1 : 1;
    Value amount = kInfinity;
    for (const SignedArc& s : cycle) {
      const Arc& x = net.arc(s.arc);
      const Value room =
          s.sign * flip > 0 ? x.upper - f[s.arc] : f[s.arc] - x.lower;
      amount = std::min(amount, room);
    }
    for (const SignedArc& s : cycle) {
      f[s.arc] += s.sign * flip * amount;
    }
  }
}

std::vector<ArcId> FreeForest(const Network& net, const Flow& f,
                              UnionFind& uf) {
  std::vector<ArcId> tree;
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    const Arc& arc = net.arc(a);
    if (IsFree(arc, f[a]) && uf.Union(arc.src, arc.dst)) tree.push_back(a);
  }
  return tree;
}

// Potentials closest to zero: distances in D_f from a virtual source with a
// zero-cost arc to every node. Nullopt if f is not optimal.
std::optional<std::vector<Value>> NearZeroPotentials(const Network& net,
                                                     const Flow& f) {
  const ResidualGraph rg = BuildResidual(net, f);
  const NodeId n = net.node_count();
  std::vector<Value> y(n, 0);
  for (NodeId round = 0; round <= n; ++round) {
    bool changed = false;
    for (const ResidualArc& r : rg.arcs()) {
      const Value through = CheckedAdd(y[r.src], r.cost);
      if (through < y[r.dst]) {
        y[r.dst] = through;
        changed = true;
      }
    }
    if (!changed) return y;
  }
  return std::nullopt;
}

// Zero reduced cost arcs join the free forest saturated arcs first, then
// empty arcs, each in id order. When the zero arcs do not connect the graph,
// the potentials outside the root component are shifted by the smallest step
// that zeroes a crossing arc; a smallest step cannot flip the sign of any
// other crossing arc.
std::vector<ArcId> OptimalSpanningTree(const Network& net, const Flow& f,
                                       std::vector<Value> y) {
  const NodeId n = net.node_count();
  UnionFind uf(n);
  std::vector<ArcId> tree = FreeForest(net, f, uf);
  for (;;) {
    const std::vector<Value> reduced = ComputeReducedCosts(net, y);
    for (const bool saturated : {true, false}) {
      for (ArcId a = 0; a < net.arc_count(); ++a) {
        const Arc& arc = net.arc(a);
        if (reduced[a] != 0 || (f[a] == arc.upper) != saturated) continue;
        if (uf.Union(arc.src, arc.dst)) tree.push_back(a);
      }
    }
    if (static_cast<NodeId>(tree.size()) + 1 >= n) break;
    const NodeId root_set = uf.Find(0);
    Value step = 0;
    bool found = false;
    for (ArcId a = 0; a < net.arc_count(); ++a) {
      const Arc& arc = net.arc(a);
      const bool src_in = uf.Find(arc.src) == root_set;
      const bool dst_in = uf.Find(arc.dst) == root_set;
      if (src_in == dst_in) continue;
      const Value delta = src_in ? reduced[a] : -reduced[a];
      if (!found || std::llabs(delta) < std::llabs(step)) {
        step = delta;
        found = true;
      }
    }
    if (!found) {
      throw FlowError(ErrorCode::kDisconnected, "network is not connected");
    }
    for (NodeId v = 0; v < n; ++v) {
      if (uf.Find(v) != root_set) y[v] = CheckedAdd(y[v], step);
    }
  }
  return tree;
}

std::vector<ArcId> AnySpanningTree(const Network& net, const Flow& f) {
  UnionFind uf(net.node_count());
  std::vector<ArcId> tree = FreeForest(net, f, uf);
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    if (uf.Union(net.arc(a).src, net.arc(a).dst)) tree.push_back(a);
  }
  return tree;
}

}  // namespace

TreeStructure MakeTreeStructure(const Network& net, const Flow& f,
                                std::span<const ArcId> tree_arcs, NodeId root) {
  const NodeId n = net.node_count();
  const ArcId m = net.arc_count();
  if (f.size() != static_cast<std::size_t>(m)) {
    throw FlowError(ErrorCode::kDimensionMismatch, "flow size");
  }
  if (root < 0 || root >= n) {
    throw FlowError(ErrorCode::kNodeIdOutOfRange, "root");
  }
  if (static_cast<NodeId>(tree_arcs.size()) + 1 != n) {
    throw FlowError(ErrorCode::kMalformedCycle,
                    "tree must have node_count - 1 arcs");
  }
  TreeStructure ts;
  ts.root = root;
  ts.state.assign(m, ArcState::kLower);
  UnionFind uf(n);
  std::vector<std::vector<ArcId>> adj(n);
  for (ArcId a : tree_arcs) {
    if (a < 0 || a >= m || ts.state[a] == ArcState::kTree) {
      throw FlowError(ErrorCode::kMalformedCycle, "bad tree arc id");
    }
    const Arc& arc = net.arc(a);
    if (!uf.Union(arc.src, arc.dst)) {
      throw FlowError(ErrorCode::kMalformedCycle, "tree arcs contain a cycle");
    }
    ts.state[a] = ArcState::kTree;
    adj[arc.src].push_back(a);
    adj[arc.dst].push_back(a);
  }
  for (ArcId a = 0; a < m; ++a) {
    if (ts.state[a] == ArcState::kTree) {
      ts.tree_arcs.push_back(a);
      continue;
    }
    const Arc& arc = net.arc(a);
    if (f[a] == arc.lower) {
      ts.lower_arcs.push_back(a);
    } else if (f[a] == arc.upper) {
      ts.state[a] = ArcState::kUpper;
      ts.upper_arcs.push_back(a);
    } else {
      throw FlowError(ErrorCode::kMalformedCycle,
                      "non-tree arc " + std::to_string(a) + " is not at a bound");
    }
  }
  ts.parent.assign(n, -1);
  ts.parent_arc.assign(n, -1);
  ts.depth.assign(n, 0);
  ts.potentials.assign(n, 0);
  std::vector<bool> seen(n, false);
  std::queue<NodeId> queue;
  queue.push(root);
  seen[root] = true;
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop();
    for (ArcId a : adj[v]) {
      const Arc& arc = net.arc(a);
      const NodeId w = arc.src == v ? arc.dst : arc.src;
      if (seen[w]) continue;
      seen[w] = true;
      ts.parent[w] = v;
      ts.parent_arc[w] = a;
      ts.depth[w] = ts.depth[v] + 1;
      ts.potentials[w] = arc.src == v ? CheckedAdd(ts.potentials[v], arc.cost)
                                      : CheckedSub(ts.potentials[v], arc.cost);
      queue.push(w);
    }
  }
  return ts;
}

TreeSolution ToTreeSolution(const Network& net, const Flow& f) {
  if (!CheckFeasible(net, f)) {
    throw FlowError(ErrorCode::kInfeasibleFlow, "flow is not feasible");
  }
  TreeSolution sol;
  sol.flow = f;
  CancelFreeCycles(net, sol.flow);
  std::optional<std::vector<Value>> y = NearZeroPotentials(net, sol.flow);
  std::vector<ArcId> tree = y ? OptimalSpanningTree(net, sol.flow, std::move(*y))
                              : AnySpanningTree(net, sol.flow);
  std::sort(tree.begin(), tree.end());
  sol.structure = MakeTreeStructure(net, sol.flow, tree);
  return sol;
}

bool IsOptimalTreeStructure(const Network& net, const TreeStructure& ts) {
  const std::vector<Value> reduced = ComputeReducedCosts(net, ts.potentials);
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    switch (ts.state[a]) {
      case ArcState::kTree:
        if (reduced[a] != 0) return false;
        break;
      case ArcState::kLower:
        // An arc with lower == upper may sit in L with any reduced cost.
        if (reduced[a] < 0 && net.arc(a).lower != net.arc(a).upper) return false;
        break;
      case ArcState::kUpper:
        if (reduced[a] > 0) return false;
        break;
    }
  }
  return true;
}

std::vector<ArcId> InducedCycle::ForwardArcs() const {
  std::vector<ArcId> out;
  for (const SignedArc& s : arcs) {
    if (s.sign > 0) out.push_back(s.arc);
  }
  return out;
}

std::vector<ArcId> InducedCycle::BackwardArcs() const {
  std::vector<ArcId> out;
  for (const SignedArc& s : arcs) {
    if (s.sign < 0) out.push_back(s.arc);
  }
  return out;
}

std::vector<Value> InducedCycle::Incidence(ArcId arc_count) const {
  std::vector<Value> chi(arc_count, 0);
  for (const SignedArc& s : arcs) chi[s.arc] += s.sign;
  return chi;
}

std::vector<SignedArc> TreePath(const Network& net, const TreeStructure& ts,
                                NodeId from, NodeId to) {
  std::vector<SignedArc> up;
  std::vector<SignedArc> down;
  NodeId x = from;
  NodeId z = to;
  while (x != z) {
    if (ts.depth[x] >= ts.depth[z]) {
      const ArcId a = ts.parent_arc[x];
      up.push_back({a, net.arc(a).src == x ? 1 : -1});
      x = ts.parent[x];
    } else {
      const ArcId a = ts.parent_arc[z];
      down.push_back({a, net.arc(a).dst == z ? 1 : -1});
      z = ts.parent[z];
    }
  }
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

InducedCycle MakeInducedCycle(const Network& net, const TreeStructure& ts,
                              ArcId a) {
  if (a < 0 || a >= net.arc_count()) {
    throw FlowError(ErrorCode::kDimensionMismatch, "arc id out of range");
  }
  if (ts.InTree(a)) {
    throw FlowError(ErrorCode::kArcInTree,
                    "arc " + std::to_string(a) + " is a tree arc");
  }
  const Arc& arc = net.arc(a);
  InducedCycle c;
  c.defining_arc = a;
  const bool along = ts.state[a] == ArcState::kLower;
  c.arcs.push_back({a, along ? 1 : -1});
  const std::vector<SignedArc> path =
      along ? TreePath(net, ts, arc.dst, arc.src)
            : TreePath(net, ts, arc.src, arc.dst);
  c.arcs.insert(c.arcs.end(), path.begin(), path.end());
  for (const SignedArc& s : c.arcs) {
    c.cost = CheckedAdd(c.cost, CheckedMul(s.sign, net.arc(s.arc).cost));
  }
  return c;
}

std::vector<ArcId> ZeroCostNonTreeSet(const Network& net,
                                      const TreeStructure& ts) {
  const std::vector<Value> reduced = ComputeReducedCosts(net, ts.potentials);
  std::vector<ArcId> out;
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    if (!ts.InTree(a) && reduced[a] == 0) out.push_back(a);
  }
  return out;
}

Value CycleFreeCapacity(const Network& net, const Flow& f,
                        const InducedCycle& c) {
  Value cap = kInfinity;
  for (const SignedArc& s : c.arcs) {
    const Arc& arc = net.arc(s.arc);
    cap = std::min(cap, s.sign > 0 ? arc.upper - f[s.arc] : f[s.arc] - arc.lower);
  }
  return cap;
}

Value CountUpperBound(const Network& net, std::span<const ArcId> arcs) {
  Value product = 1;
  for (ArcId a : arcs) {
    const Arc& arc = net.arc(a);
    product = SaturatingMul(product, SaturatingAdd(arc.upper - arc.lower, 1));
  }
  return std::max<Value>(1, product);
}

std::pair<Value, Value> CountLowerBound(const Network& net,
                                        const TreeStructure& ts,
                                        std::span<const ArcId> arcs,
                                        const Flow& f) {
  Value sum = 0;
  for (ArcId a : arcs) {
    sum = SaturatingAdd(sum, CycleFreeCapacity(net, f, MakeInducedCycle(net, ts, a)));
  }
  return {std::max<Value>(1, sum), std::min<Value>(1, sum)};
}

namespace {

CountBounds BoundsOver(const Network& net, const TreeSolution& sol,
                       std::span<const ArcId> arcs) {
  CountBounds out;
  out.upper = CountUpperBound(net, arcs);
  std::tie(out.lower, out.lower_as_printed) =
      CountLowerBound(net, sol.structure, arcs, sol.flow);
  return out;
}

}  // namespace

CountBounds OptimalCountBounds(const Network& net, const TreeSolution& sol) {
  const std::vector<ArcId> s = ZeroCostNonTreeSet(net, sol.structure);
  return BoundsOver(net, sol, s);
}

CountBounds FeasibleCountBounds(const Network& net, const TreeSolution& sol) {
  std::vector<ArcId> non_tree;
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    if (!sol.structure.InTree(a)) non_tree.push_back(a);
  }
  return BoundsOver(net, sol, non_tree);
}

std::vector<InducedCycle> DecomposeCycle(const Network& net,
                                         const TreeStructure& ts,
                                         const UndirectedCycle& cycle) {
  if (cycle.empty()) {
    throw FlowError(ErrorCode::kMalformedCycle, "empty cycle");
  }
  for (const SignedArc& s : cycle) {
    if (s.arc < 0 || s.arc >= net.arc_count() || (s.sign != 1 && s.sign != -1)) {
      throw FlowError(ErrorCode::kMalformedCycle, "bad signed arc");
    }
  }
  const Arc& first = net.arc(cycle.front().arc);
  const NodeId start = cycle.front().sign > 0 ? first.src : first.dst;
  NodeId at = start;
  for (const SignedArc& s : cycle) {
    const Arc& arc = net.arc(s.arc);
    const NodeId tail = s.sign > 0 ? arc.src : arc.dst;
    if (tail != at) {
      throw FlowError(ErrorCode::kMalformedCycle, "arcs do not chain");
    }
    at = s.sign > 0 ? arc.dst : arc.src;
  }
  if (at != start) {
    throw FlowError(ErrorCode::kMalformedCycle, "walk does not close");
  }
  std::vector<InducedCycle> out;
  for (const SignedArc& s : cycle) {
    if (!ts.InTree(s.arc)) out.push_back(MakeInducedCycle(net, ts, s.arc));
  }
  if (out.empty()) {
    throw FlowError(ErrorCode::kCycleEntirelyInTree, "all arcs are tree arcs");
  }
  return out;
}

std::vector<ArcId> ComposeArcSets(std::span<const InducedCycle> cycles) {
  std::vector<ArcId> all;
  for (const InducedCycle& c : cycles) {
    for (const SignedArc& s : c.arcs) all.push_back(s.arc);
  }
  std::sort(all.begin(), all.end());
  std::vector<ArcId> out;
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i;
    while (j < all.size() && all[j] == all[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(all[i]);
    i = j;
  }
  return out;
}

bool IncidenceSumCheck(const Network& net, const TreeStructure& ts,
                       const Cycle& c) {
  const ArcId m = net.arc_count();
  const std::vector<Value> chi = c.Incidence(m);
  std::vector<Value> sum(m, 0);
  Value cost = 0;
  for (const ResidualArc& r : c.arcs) {
    if (ts.InTree(r.origin)) continue;
    const InducedCycle induced = MakeInducedCycle(net, ts, r.origin);
    for (const SignedArc& s : induced.arcs) sum[s.arc] += s.sign;
    cost = CheckedAdd(cost, induced.cost);
  }
  return chi == sum && CycleCost(c) == cost;
}

Flow ReconstructFromCycleBasis(const Network& net, const TreeSolution& sol,
                               std::span<const Value> lambda) {
  if (lambda.size() != static_cast<std::size_t>(net.arc_count())) {
    throw FlowError(ErrorCode::kDimensionMismatch, "lambda size");
  }
  Flow out = sol.flow;
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    if (lambda[a] == 0) continue;
    const InducedCycle c = MakeInducedCycle(net, sol.structure, a);
    for (const SignedArc& s : c.arcs) {
      out[s.arc] = CheckedAdd(out[s.arc], CheckedMul(s.sign, lambda[a]));
    }
  }
  return out;
}

std::optional<std::vector<Value>> ExpressInCycleBasis(const Network& net,
                                                      const TreeSolution& sol,
                                                      const Flow& other) {
  const ArcId m = net.arc_count();
  if (other.size() != static_cast<std::size_t>(m)) {
    throw FlowError(ErrorCode::kDimensionMismatch, "flow size");
  }
  if (!CheckFeasible(net, other)) return std::nullopt;
  if (FlowCost(net, other) != FlowCost(net, sol.flow)) return std::nullopt;
  const std::vector<Value> reduced =
      ComputeReducedCosts(net, sol.structure.potentials);
  std::vector<Value> lambda(m, 0);
  for (ArcId a = 0; a < m; ++a) {
    if (sol.structure.InTree(a)) continue;
    const Arc& arc = net.arc(a);
    lambda[a] = sol.structure.state[a] == ArcState::kLower
                    ? other[a] - arc.lower
                    : arc.upper - other[a];
    if (lambda[a] != 0 && reduced[a] != 0) return std::nullopt;
  }
  if (ReconstructFromCycleBasis(net, sol, lambda) != other) return std::nullopt;
  return lambda;
}

}  // namespace mcfenum
