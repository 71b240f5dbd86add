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

// Tree solutions, induced cycles and bounds on the number of optimal and
// feasible integer flows.
//
// Given a spanning tree T and a split of the remaining arcs into L (at lower
// bound) and U (at upper bound), every non-tree arc a closes a unique cycle
// C_a with the tree, oriented along a for a in L and against it for a in U.
// Every optimal flow is the optimal tree flow plus a bounded nonnegative
// integer combination of the zero-cost induced cycles, which yields the
// counting bounds below.

#ifndef MCFENUM_BOUNDS_HPP_
#define MCFENUM_BOUNDS_HPP_

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mcfenum/network.hpp"
#include "mcfenum/residual.hpp"

namespace mcfenum {

enum class ArcState { kTree, kLower, kUpper };

struct TreeStructure {
  std::vector<ArcId> tree_arcs;   // T, ascending
  std::vector<ArcId> lower_arcs;  // L, ascending
  std::vector<ArcId> upper_arcs;  // U, ascending
  std::vector<ArcState> state;    // per arc
  // y_v: signed cost of the tree path from the root to v.
  std::vector<Value> potentials;
  NodeId root = 0;
  // The tree rooted at `root`.
  std::vector<NodeId> parent;
  std::vector<ArcId> parent_arc;
  std::vector<int> depth;

  bool InTree(ArcId a) const { return state[a] == ArcState::kTree; }
};

struct TreeSolution {
  Flow flow;
  TreeStructure structure;
};

// Builds the structure for a given spanning tree. Non-tree arcs at their
// lower bound go to L (including arcs with lower == upper), those at their
// upper bound to U. Throws kMalformedCycle if `tree_arcs` is not a spanning
// tree or a non-tree arc is strictly between its bounds.
TreeStructure MakeTreeStructure(const Network& net, const Flow& f,
                                std::span<const ArcId> tree_arcs,
                                NodeId root = 0);

// Turns a feasible flow into a tree solution: free cycles (arcs strictly
// inside their bounds) are canceled in their non-increasing cost direction
// until the free arcs form a forest, which is then extended to a spanning
// tree. For an optimal flow the extension only uses arcs of zero reduced
// cost, shifting optimal potentials when needed, so the result satisfies
// the optimality conditions c̄ = 0 on T, c̄ >= 0 on L and c̄ <= 0 on U.
TreeSolution ToTreeSolution(const Network& net, const Flow& f);

// True iff c̄ (from the tree potentials) is 0 on T, >= 0 on L, <= 0 on U.
bool IsOptimalTreeStructure(const Network& net, const TreeStructure& ts);

// Arc traversed by an induced cycle, with +1 if the cycle follows the arc's
// direction and -1 otherwise.
struct SignedArc {
  ArcId arc = 0;
  int sign = 1;

  bool operator==(const SignedArc&) const = default;
};

struct InducedCycle {
  ArcId defining_arc = 0;
  // The defining arc first, then the tree path back to its start.
  std::vector<SignedArc> arcs;
  Value cost = 0;

  // Arcs with sign +1 (resp. -1), in traversal order.
  std::vector<ArcId> ForwardArcs() const;
  std::vector<ArcId> BackwardArcs() const;
  std::vector<Value> Incidence(ArcId arc_count) const;
};

// Throws kArcInTree if a is a tree arc.
InducedCycle MakeInducedCycle(const Network& net, const TreeStructure& ts,
                              ArcId a);

// Signed arcs of the undirected tree path from `from` to `to`.
std::vector<SignedArc> TreePath(const Network& net, const TreeStructure& ts,
                                NodeId from, NodeId to);

// S: non-tree arcs whose reduced cost under the tree potentials is zero.
std::vector<ArcId> ZeroCostNonTreeSet(const Network& net,
                                      const TreeStructure& ts);

// Residual capacity of C_a in its orientation for the tree flow f.
Value CycleFreeCapacity(const Network& net, const Flow& f,
                        const InducedCycle& c);

struct CountBounds {
  // max(1, sum of u(C_a)).
  Value lower = 1;
  // min(1, sum of u(C_a)), the min form of the same bound.
  Value lower_as_printed = 0;
  // max(1, product of (u_a - l_a + 1)), saturating at kInfinity.
  Value upper = 1;
};

// max(1, prod_{a in arcs} (u_a - l_a + 1)), saturating at kInfinity.
Value CountUpperBound(const Network& net, std::span<const ArcId> arcs);

// Lower bounds from sum_{a in arcs} u(C_a) for the tree flow f; returns
// {max reading, min reading}.
std::pair<Value, Value> CountLowerBound(const Network& net,
                                        const TreeStructure& ts,
                                        std::span<const ArcId> arcs,
                                        const Flow& f);

// Bounds on the number of optimal flows (over S).
CountBounds OptimalCountBounds(const Network& net, const TreeSolution& sol);

// Bounds on the number of feasible flows (over all non-tree arcs).
CountBounds FeasibleCountBounds(const Network& net, const TreeSolution& sol);

// An undirected cycle of the network as signed arcs in traversal order.
using UndirectedCycle = std::vector<SignedArc>;

// The induced cycles of the non-tree arcs of `cycle`, in order of
// appearance. Throws kCycleEntirelyInTree if every arc is a tree arc and
// kMalformedCycle if the arcs do not close.
std::vector<InducedCycle> DecomposeCycle(const Network& net,
                                         const TreeStructure& ts,
                                         const UndirectedCycle& cycle);

// Symmetric difference of the arc sets of `cycles`, ascending.
std::vector<ArcId> ComposeArcSets(std::span<const InducedCycle> cycles);

// For a cycle C of D_f, f the tree flow of ts: checks
// chi(C) == sum chi(C_a) and c(f,C) == sum c(C_a) over the non-tree arcs a
// of C.
bool IncidenceSumCheck(const Network& net, const TreeStructure& ts,
                       const Cycle& c);

// Coefficients lambda (dense, indexed by arc id, zero off S) with
// f* = f + sum lambda_a chi(C_a), or nullopt if f* is not an optimal flow.
// f is the flow of an optimal tree solution. Throws kDimensionMismatch.
std::optional<std::vector<Value>> ExpressInCycleBasis(const Network& net,
                                                      const TreeSolution& sol,
                                                      const Flow& other);

// f + sum lambda_a chi(C_a).
Flow ReconstructFromCycleBasis(const Network& net, const TreeSolution& sol,
                               std::span<const Value> lambda);

}  // namespace mcfenum

#endif  // MCFENUM_BOUNDS_HPP_
