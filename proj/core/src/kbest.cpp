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

#include "mcfenum/kbest.hpp"

#include <algorithm>
#include <queue>
#include <tuple>
#include <utility>

#include "mcfenum/mcf.hpp"

namespace mcfenum {

DistanceTable ComputeDistanceTable(const ResidualGraph& rg,
                                   std::span<const Value> reduced_costs) {
  const NodeId n = rg.node_count();
  DistanceTable table;
  table.n_ = n;
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  table.dist_.assign(cells, DistanceTable::kUnreachable);
  table.last_arc_.assign(cells, -1);
  table.arc_src_.resize(rg.arc_count());
  for (NodeId v = 0; v < n; ++v) table.dist_[table.Index(v, v)] = 0;
  for (int e = 0; e < rg.arc_count(); ++e) {
    const ResidualArc& r = rg.arc(e);
    table.arc_src_[e] = r.src;
    const Value w = ResidualReducedCost(r, reduced_costs);
    if (w < 0) {
      throw FlowError(ErrorCode::kNegativeReducedCost,
                      "residual arc " + std::to_string(e) + " has reduced cost " +
                          std::to_string(w));
    }
    const std::size_t cell = table.Index(r.src, r.dst);
    if (w < table.dist_[cell]) {
      table.dist_[cell] = w;
      table.last_arc_[cell] = e;
    }
  }
  for (NodeId k = 0; k < n; ++k) {
    for (NodeId i = 0; i < n; ++i) {
      const Value dik = table.dist_[table.Index(i, k)];
      if (dik == DistanceTable::kUnreachable) continue;
      for (NodeId j = 0; j < n; ++j) {
        const Value dkj = table.dist_[table.Index(k, j)];
        if (dkj == DistanceTable::kUnreachable) continue;
        const Value through = CheckedAdd(dik, dkj);
        const std::size_t cell = table.Index(i, j);
        if (through < table.dist_[cell]) {
          table.dist_[cell] = through;
          table.last_arc_[cell] = table.last_arc_[table.Index(k, j)];
        }
      }
    }
  }
  return table;
}

std::vector<int> DistanceTable::Path(NodeId from, NodeId to) const {
  if (dist_[Index(from, to)] == kUnreachable) {
    throw FlowError(ErrorCode::kMalformedCycle, "no path between nodes");
  }
  std::vector<int> reversed;
  for (NodeId v = to; v != from;) {
    if (reversed.size() >= static_cast<std::size_t>(n_)) {
      throw FlowError(ErrorCode::kMalformedCycle, "predecessor chain loops");
    }
    const int e = last_arc_[Index(from, v)];
    reversed.push_back(e);
    v = arc_src_[e];
  }
  return {reversed.rbegin(), reversed.rend()};
}

std::vector<int> CandidateArcSet(const Network& net, const Flow& f,
                                 const ResidualGraph& rg) {
  std::vector<int> out;
  for (int e = 0; e < rg.arc_count(); ++e) {
    const ResidualArc& r = rg.arc(e);
    const Arc& arc = net.arc(r.origin);
    const bool at_bound = r.direction == Direction::kForward
                              ? f[r.origin] == arc.lower
                              : f[r.origin] == arc.upper;
    if (at_bound) out.push_back(e);
  }
  return out;
}

std::optional<Flow> FindSecondBestFlow(const Network& net, const Flow& f) {
  const NodePotential potential = ComputeNodePotentials(net, f);
  const std::vector<Value> reduced = ComputeReducedCosts(net, potential.y);
  if (std::optional<Flow> tie = FindAnotherOptimalFlow(net, f, reduced)) {
    return tie;
  }
  const ResidualGraph rg = BuildResidual(net, f);
  const DistanceTable table = ComputeDistanceTable(rg, reduced);
  int best_arc = -1;
  Value best_cost = kInfinity;
  for (int e : CandidateArcSet(net, f, rg)) {
    const ResidualArc& r = rg.arc(e);
    const Value back = table.distance(r.dst, r.src);
    if (back == DistanceTable::kUnreachable) continue;
    const Value cost = CheckedAdd(ResidualReducedCost(r, reduced), back);
    if (cost < best_cost) {
      best_cost = cost;
      best_arc = e;
    }
  }
  if (best_arc < 0) return std::nullopt;
  Cycle cycle;
  const ResidualArc& closing = rg.arc(best_arc);
  cycle.arcs.push_back(closing);
  for (int e : table.Path(closing.dst, closing.src)) cycle.arcs.push_back(rg.arc(e));
  return Augment(f, cycle, 1);
}

namespace {

struct RankedCandidate {
  Value key = 0;
  std::uint64_t sequence = 0;
  Flow parent;
  Flow challenger;
  OverrideList overrides;
};

struct LaterFirst {
  bool operator()(const RankedCandidate& x, const RankedCandidate& y) const {
    return std::tie(x.key, x.sequence) > std::tie(y.key, y.sequence);
  }
};

}  // namespace

KBestStats FindKBestFlows(const Network& net, std::uint64_t k,
                          const FlowSink& sink) {
  KBestStats stats;
  if (k == 0) return stats;
  const Flow best = SolveMinCostFlow(net);
  sink(best);
  stats.count = 1;

  std::priority_queue<RankedCandidate, std::vector<RankedCandidate>, LaterFirst>
      heap;
  std::uint64_t sequence = 0;
  auto consider = [&](const Network& sub, const Flow& parent,
                      const OverrideList& overrides) {
    ++stats.second_best_calls;
    if (std::optional<Flow> next = FindSecondBestFlow(sub, parent)) {
      const Value key = FlowCost(net, *next);
      heap.push({key, sequence++, parent, std::move(*next), overrides});
    }
  };
  consider(net, best, OverrideList{});

  while (!heap.empty() && stats.count < k) {
    RankedCandidate top = heap.top();
    heap.pop();
    sink(top.challenger);
    ++stats.count;
    if (stats.count == k) break;
    auto [keep, other] = PartitionSolutionSpace(top.parent, top.challenger);
    const OverrideList first = top.overrides.Push(keep);
    const OverrideList second = top.overrides.Push(other);
    consider(first.Apply(net), top.parent, first);
    consider(second.Apply(net), top.challenger, second);
  }
  return stats;
}

}  // namespace mcfenum
