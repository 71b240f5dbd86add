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

#ifndef MCFENUM_KBEST_HPP_
#define MCFENUM_KBEST_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mcfenum/aof.hpp"
#include "mcfenum/network.hpp"
#include "mcfenum/residual.hpp"

namespace mcfenum {

// All-pairs shortest paths in D_f under residual reduced costs.
class DistanceTable {
 public:
  static constexpr Value kUnreachable = kInfinity;

  NodeId node_count() const { return n_; }
  Value distance(NodeId from, NodeId to) const { return dist_[Index(from, to)]; }
  // Residual arc indices of a shortest path from -> to; empty if from == to.
  // Throws kMalformedCycle if `to` is unreachable.
  std::vector<int> Path(NodeId from, NodeId to) const;

  friend DistanceTable ComputeDistanceTable(const ResidualGraph&,
                                            std::span<const Value>);

 private:
  std::size_t Index(NodeId i, NodeId j) const {
    return static_cast<std::size_t>(i) * n_ + j;
  }
  NodeId n_ = 0;
  std::vector<Value> dist_;
  // Last residual arc of the current shortest i -> j path, -1 if none.
  std::vector<int> last_arc_;
  std::vector<NodeId> arc_src_;
};

// Floyd-Warshall over the residual arcs, with per-arc reduced costs
// `reduced_costs` (indexed by original arc). Throws kNegativeReducedCost if
// some residual arc has negative reduced cost.
DistanceTable ComputeDistanceTable(const ResidualGraph& rg,
                                   std::span<const Value> reduced_costs);

// Residual arcs whose origin sits at a bound in the arc's direction: forward
// arcs with f = lower, backward arcs with f = upper. None of them has a
// symmetric partner in D_f. Returned as residual arc indices.
std::vector<int> CandidateArcSet(const Network& net, const Flow& f,
                                 const ResidualGraph& rg);

// A cheapest flow different from f, or nullopt if f is the only feasible
// flow. f must be optimal in net; ties are resolved by the optimal-flow
// search before the distance table is built.
std::optional<Flow> FindSecondBestFlow(const Network& net, const Flow& f);

struct KBestStats {
  std::uint64_t count = 0;
  std::uint64_t second_best_calls = 0;
};

// Emits up to K distinct flows in nondecreasing cost, with no unemitted flow
// cheaper than the last one. Throws kInfeasible.
KBestStats FindKBestFlows(const Network& net, std::uint64_t k,
                          const FlowSink& sink);

}  // namespace mcfenum

#endif  // MCFENUM_KBEST_HPP_
