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

#ifndef MCFENUM_RESIDUAL_HPP_
#define MCFENUM_RESIDUAL_HPP_

#include <span>
#include <vector>

#include "mcfenum/network.hpp"

namespace mcfenum {

enum class Direction { kForward, kBackward };

struct ResidualArc {
  NodeId src = 0;
  NodeId dst = 0;
  Value residual_capacity = 0;
  // c_ij(f): the origin cost for forward arcs, its negation for backward arcs.
  Value cost = 0;
  ArcId origin = 0;
  Direction direction = Direction::kForward;

  bool operator==(const ResidualArc&) const = default;
};

// Two residual arcs are symmetric when they come from the same original arc
// in opposite directions.
inline bool AreSymmetric(const ResidualArc& x, const ResidualArc& y) {
  return x.origin == y.origin && x.direction != y.direction;
}

// Residual graph D_f. Arcs are ordered by origin arc id, forward before
// backward; adjacency lists keep that order.
class ResidualGraph {
 public:
  ResidualGraph() = default;

  NodeId node_count() const { return static_cast<NodeId>(out_.size()); }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const ResidualArc& arc(int index) const { return arcs_[index]; }
  std::span<const ResidualArc> arcs() const { return arcs_; }
  // Indices into arcs() of the arcs leaving v.
  std::span<const int> out_arcs(NodeId v) const { return out_[v]; }
  // Index of the residual arc of `origin` in `dir`, or -1 if absent.
  int Find(ArcId origin, Direction dir) const {
    return dir == Direction::kForward ? forward_[origin] : backward_[origin];
  }
  // Index of the symmetric partner of arc `index`, or -1.
  int Partner(int index) const {
    const ResidualArc& r = arcs_[index];
    return Find(r.origin, r.direction == Direction::kForward
                              ? Direction::kBackward
                              : Direction::kForward);
  }

  friend ResidualGraph BuildResidual(const Network& net, const Flow& f);

 private:
  std::vector<ResidualArc> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<int> forward_;
  std::vector<int> backward_;
};

// Throws kInfeasibleFlow (or kDimensionMismatch) unless CheckFeasible holds.
ResidualGraph BuildResidual(const Network& net, const Flow& f);

// Closed directed walk in a residual graph.
struct Cycle {
  std::vector<ResidualArc> arcs;

  bool empty() const { return arcs.empty(); }
  // True iff consecutive arcs share endpoints and the walk closes.
  bool IsClosedWalk() const;
  // No two arcs with the same origin and opposite directions.
  bool IsProper() const;
  // chi(C) over `arc_count` original arcs.
  std::vector<Value> Incidence(ArcId arc_count) const;
  // The same cycle traversed backwards, every arc replaced by its symmetric
  // counterpart. Capacities are left at zero; they are unknown here.
  Cycle Reversed() const;
};

// Sum of residual costs c(f,C).
Value CycleCost(const Cycle& c);

// Sum of residual reduced costs under node potential y; equals CycleCost.
Value ReducedCycleCost(const Cycle& c, std::span<const Value> y);

// f + lambda * chi(C). Throws kCapacityExceeded if lambda exceeds the
// smallest residual capacity on C, kMalformedCycle if C is not closed or
// lambda < 1.
Flow Augment(const Flow& f, const Cycle& c, Value lambda);

}  // namespace mcfenum

#endif  // MCFENUM_RESIDUAL_HPP_
