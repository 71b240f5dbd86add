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

#ifndef MCFENUM_MCF_HPP_
#define MCFENUM_MCF_HPP_

#include <span>
#include <vector>

#include "mcfenum/network.hpp"
#include "mcfenum/residual.hpp"

namespace mcfenum {

struct NodePotential {
  std::vector<Value> y;
  NodeId root = 0;
};

// One optimal integer flow, by successive shortest paths with node
// potentials. Positive lower bounds are shifted out before solving and
// negative-cost arcs start saturated, so every Dijkstra run sees nonnegative
// reduced costs. Throws kInfeasible if no b-flow exists.
Flow SolveMinCostFlow(const Network& net);

// Cost of the artificial root arcs used when some node is unreachable in the
// residual graph: 1 + sum |cost| * max(1, upper).
Value ArtificialArcCost(const Network& net);

// Shortest-path distances from `root` in D_f under residual costs, with an
// artificial arc root -> v of cost ArtificialArcCost() for every node.
// Throws kNegativeCycleDetected if f is not optimal.
NodePotential ComputeNodePotentials(const Network& net, const Flow& f,
                                    NodeId root = 0);

// c_a + y_src - y_dst for every original arc.
std::vector<Value> ComputeReducedCosts(const Network& net,
                                       std::span<const Value> y);

// Reduced cost of a residual arc given the per-arc reduced costs: c̄ for
// forward arcs, -c̄ for backward arcs.
inline Value ResidualReducedCost(const ResidualArc& r,
                                 std::span<const Value> reduced) {
  return r.direction == Direction::kForward ? reduced[r.origin]
                                            : -reduced[r.origin];
}

}  // namespace mcfenum

#endif  // MCFENUM_MCF_HPP_
