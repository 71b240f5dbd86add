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

#include "mcfenum/mcf.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

namespace mcfenum {
namespace {

// Residual multigraph used only by the solver. Edge 2k and 2k+1 are mutual
// reverses.
class SolverGraph {
 public:
  explicit SolverGraph(NodeId n) : adj_(n) {}

  int AddEdge(NodeId from, NodeId to, Value cap, Value cost) {
    int id = static_cast<int>(to_.size());
    to_.push_back(to);
    cap_.push_back(cap);
    cost_.push_back(cost);
    adj_[from].push_back(id);
    to_.push_back(from);
    cap_.push_back(0);
    cost_.push_back(-cost);
    adj_[to].push_back(id + 1);
    return id;
  }

  NodeId node_count() const { return static_cast<NodeId>(adj_.size()); }

  // Sends up to `supply` units from s to t along successive cheapest paths.
  Value SendFlow(NodeId s, NodeId t, Value supply) {
    const NodeId n = node_count();
    std::vector<Value> h = InitialPotentials(s);
    Value sent = 0;
    std::vector<Value> dist(n);
    std::vector<int> via(n);
    using Entry = std::pair<Value, NodeId>;
    while (sent < supply) {
      std::fill(dist.begin(), dist.end(), kInfinity);
      std::fill(via.begin(), via.end(), -1);
      std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
      dist[s] = 0;
      heap.push({0, s});
      while (!heap.empty()) {
        auto [d, u] = heap.top();
        heap.pop();
        if (d != dist[u]) continue;
        for (int e : adj_[u]) {
          if (cap_[e] == 0) continue;
          NodeId v = to_[e];
          Value reduced = CheckedSub(CheckedAdd(cost_[e], h[u]), h[v]);
          Value nd = CheckedAdd(d, reduced);
          if (nd < dist[v]) {
            dist[v] = nd;
            via[v] = e;
            heap.push({nd, v});
          }
        }
      }
      if (dist[t] == kInfinity) break;
      for (NodeId v = 0; v < n; ++v) {
        if (dist[v] != kInfinity) h[v] = CheckedAdd(h[v], dist[v]);
      }
      Value push = supply - sent;
      for (NodeId v = t; v != s; v = to_[via[v] ^ 1]) {
        push = std::min(push, cap_[via[v]]);
      }
      for (NodeId v = t; v != s; v = to_[via[v] ^ 1]) {
        cap_[via[v]] -= push;
        cap_[via[v] ^ 1] += push;
      }
      sent += push;
    }
    return sent;
  }

  Value cap(int e) const { return cap_[e]; }

 private:
  // Bellman-Ford from s over edges with spare capacity. Unreachable nodes
  // keep potential 0; they stay unreachable for the whole run because
  // augmentations only add reverse edges between reachable nodes.
  std::vector<Value> InitialPotentials(NodeId s) const {
    const NodeId n = node_count();
    std::vector<Value> h(n, kInfinity);
    h[s] = 0;
    for (NodeId round = 0; round < n; ++round) {
      bool changed = false;
      for (NodeId u = 0; u < n; ++u) {
        if (h[u] == kInfinity) continue;
        for (int e : adj_[u]) {
          if (cap_[e] == 0) continue;
          Value nd = CheckedAdd(h[u], cost_[e]);
          if (nd < h[to_[e]]) {
            h[to_[e]] = nd;
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    for (Value& x : h) {
      if (x == kInfinity) x = 0;
    }
    return h;
  }

  std::vector<std::vector<int>> adj_;
  std::vector<NodeId> to_;
  std::vector<Value> cap_;
  std::vector<Value> cost_;
};

}  // namespace

Flow SolveMinCostFlow(const Network& net) {
  const NodeId n = net.node_count();
  const ArcId m = net.arc_count();
  Value total = 0;
  for (Value b : net.balances()) total = CheckedAdd(total, b);
  if (total != 0) {
    throw FlowError(ErrorCode::kInfeasible, "balances do not sum to zero");
  }

  // Substitute x = f - l, then saturate negative-cost arcs.
  std::vector<Value> excess(net.balances().begin(), net.balances().end());
  std::vector<Value> base(m, 0);
  for (ArcId a = 0; a < m; ++a) {
    const Arc& arc = net.arc(a);
    if (arc.lower > arc.upper) {
      throw FlowError(ErrorCode::kInfeasible,
                      "arc " + std::to_string(a) + " has lower > upper");
    }
    base[a] = arc.lower;
    if (arc.cost < 0) base[a] = arc.upper;
    excess[arc.src] = CheckedSub(excess[arc.src], base[a]);
    excess[arc.dst] = CheckedAdd(excess[arc.dst], base[a]);
  }

  const NodeId source = n, sink = n + 1;
  SolverGraph g(n + 2);
  std::vector<int> edge_of(m);
  for (ArcId a = 0; a < m; ++a) {
    const Arc& arc = net.arc(a);
    if (arc.cost < 0) {
      // Saturated: the residual capacity sits on the reverse edge.
      edge_of[a] = g.AddEdge(arc.dst, arc.src, arc.upper - arc.lower, -arc.cost);
    } else {
      edge_of[a] = g.AddEdge(arc.src, arc.dst, arc.upper - arc.lower, arc.cost);
    }
  }
  Value supply = 0;
  for (NodeId v = 0; v < n; ++v) {
    if (excess[v] > 0) {
      g.AddEdge(source, v, excess[v], 0);
      supply = CheckedAdd(supply, excess[v]);
    } else if (excess[v] < 0) {
      g.AddEdge(v, sink, -excess[v], 0);
    }
  }
  if (g.SendFlow(source, sink, supply) < supply) {
    throw FlowError(ErrorCode::kInfeasible, "no feasible b-flow exists");
  }

  Flow f = Flow::Zero(m);
  for (ArcId a = 0; a < m; ++a) {
    const Arc& arc = net.arc(a);
    // Flow pushed on the solver edge is the capacity of its reverse.
    Value moved = g.cap(edge_of[a] ^ 1);
    f[a] = arc.cost < 0 ? arc.upper - moved : arc.lower + moved;
  }
  return f;
}

Value ArtificialArcCost(const Network& net) {
  Value total = 1;
  for (const Arc& arc : net.arcs()) {
    Value mag = arc.cost < 0 ? CheckedSub(0, arc.cost) : arc.cost;
    total = CheckedAdd(total, CheckedMul(mag, std::max<Value>(1, arc.upper)));
  }
  return total;
}

NodePotential ComputeNodePotentials(const Network& net, const Flow& f,
                                    NodeId root) {
  const NodeId n = net.node_count();
  if (root < 0 || root >= n) {
    throw FlowError(ErrorCode::kNodeIdOutOfRange, "root out of range");
  }
  ResidualGraph rg = BuildResidual(net, f);
  const Value artificial = ArtificialArcCost(net);
  std::vector<Value> y(n, artificial);
  y[root] = 0;
  // Bellman-Ford; the artificial arcs are folded into the initial values.
  for (NodeId round = 0; round <= n; ++round) {
    bool changed = false;
    for (const ResidualArc& r : rg.arcs()) {
      Value nd = CheckedAdd(y[r.src], r.cost);
      if (nd < y[r.dst]) {
        y[r.dst] = nd;
        changed = true;
      }
    }
    if (!changed) return NodePotential{std::move(y), root};
  }
  throw FlowError(ErrorCode::kNegativeCycleDetected,
                  "residual graph has a negative cycle; flow is not optimal");
}

std::vector<Value> ComputeReducedCosts(const Network& net,
                                       std::span<const Value> y) {
  if (y.size() != static_cast<std::size_t>(net.node_count())) {
    throw FlowError(ErrorCode::kDimensionMismatch, "potential size");
  }
  std::vector<Value> reduced(net.arc_count());
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    const Arc& arc = net.arc(a);
    reduced[a] = CheckedSub(CheckedAdd(arc.cost, y[arc.src]), y[arc.dst]);
  }
  return reduced;
}

}  // namespace mcfenum
