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

#include "mcfenum/aof.hpp"

#include <utility>

#include "mcfenum/cycle_finder.hpp"
#include "mcfenum/mcf.hpp"

namespace mcfenum {

Flow ReducedNetwork::Restrict(const Flow& f) const {
  Flow out = Flow::Zero(static_cast<ArcId>(kept_arcs.size()));
  for (std::size_t k = 0; k < kept_arcs.size(); ++k) {
    out.values[k] = f[kept_arcs[k]];
  }
  return out;
}

Flow ReducedNetwork::Splice(const Flow& base, const Flow& reduced) const {
  Flow out = base;
  for (std::size_t k = 0; k < kept_arcs.size(); ++k) {
    out[kept_arcs[k]] = reduced.values[k];
  }
  return out;
}

ReducedNetwork ReduceNetwork(const Network& net, const Flow& f,
                             std::span<const Value> reduced_costs) {
  if (reduced_costs.size() != static_cast<std::size_t>(net.arc_count()) ||
      f.size() != static_cast<std::size_t>(net.arc_count())) {
    throw FlowError(ErrorCode::kDimensionMismatch, "reduced cost or flow size");
  }
  ReducedNetwork out;
  std::vector<Value> balances(net.balances().begin(), net.balances().end());
  std::vector<Arc> arcs;
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    const Arc& arc = net.arc(a);
    if (reduced_costs[a] == 0) {
      out.kept_arcs.push_back(a);
      arcs.push_back(arc);
    } else {
      out.removed_arcs.push_back(a);
      balances[arc.src] = CheckedSub(balances[arc.src], f[a]);
      balances[arc.dst] = CheckedAdd(balances[arc.dst], f[a]);
    }
  }
  out.network = Network(net.node_count(), std::move(arcs), std::move(balances));
  return out;
}

std::optional<Flow> FindAnotherOptimalFlow(const Network& net, const Flow& f,
                                           std::span<const Value> reduced_costs) {
  ReducedNetwork reduced = ReduceNetwork(net, f, reduced_costs);
  std::optional<Flow> next =
      FindAnotherFeasibleFlow(reduced.network, reduced.Restrict(f));
  if (!next) return std::nullopt;
  return reduced.Splice(f, *next);
}

EnumerationStats EnumerateAllOptimal(const Network& net, const Flow& optimal,
                                     std::span<const Value> reduced_costs,
                                     const FlowSink& sink,
                                     std::optional<std::uint64_t> limit) {
  EnumerationStats stats;
  if (limit && *limit == 0) {
    stats.limit_reached = true;
    return stats;
  }
  // The network is reduced once; zero reduced costs stay zero under any flow
  // change on A'.
  const ReducedNetwork reduced = ReduceNetwork(net, optimal, reduced_costs);
  sink(optimal);
  stats.count = 1;

  std::vector<Subproblem> stack;
  stack.push_back({OverrideList{}, reduced.Restrict(optimal)});
  while (!stack.empty()) {
    Subproblem sub = std::move(stack.back());
    stack.pop_back();
    const Network restricted = sub.overrides.Apply(reduced.network);
    ++stats.calls;
    std::optional<Flow> next = FindAnotherFeasibleFlow(restricted, sub.witness);
    if (!next) continue;
    if (limit && stats.count >= *limit) {
      stats.limit_reached = true;
      return stats;
    }
    sink(reduced.Splice(optimal, *next));
    ++stats.count;
    auto [keep, other] = PartitionSolutionSpace(sub.witness, *next);
    // LIFO: the branch holding the old witness is explored first.
    stack.push_back({sub.overrides.Push(other), std::move(*next)});
    stack.push_back({sub.overrides.Push(keep), std::move(sub.witness)});
  }
  return stats;
}

EnumerationStats EnumerateAllOptimal(const Network& net, const FlowSink& sink,
                                     std::optional<std::uint64_t> limit) {
  Flow optimal = SolveMinCostFlow(net);
  NodePotential potential = ComputeNodePotentials(net, optimal);
  std::vector<Value> reduced = ComputeReducedCosts(net, potential.y);
  return EnumerateAllOptimal(net, optimal, reduced, sink, limit);
}

}  // namespace mcfenum
