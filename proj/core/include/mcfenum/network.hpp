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

#ifndef MCFENUM_NETWORK_HPP_
#define MCFENUM_NETWORK_HPP_

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "mcfenum/types.hpp"

namespace mcfenum {

struct Arc {
  NodeId src = 0;
  NodeId dst = 0;
  Value lower = 0;
  Value upper = 0;
  Value cost = 0;

  bool operator==(const Arc&) const = default;
};

// Immutable arc-list network with integer bounds, costs and node balances.
// Arc ids are the positions in the arc list; parallel and anti-parallel arcs
// are allowed. The constructor only checks structure (node ids in range, no
// self-loops, balance vector size); ValidateNetwork() checks the remaining
// standing assumptions.
class Network {
 public:
  Network() = default;
  Network(NodeId node_count, std::vector<Arc> arcs, std::vector<Value> balances);

  NodeId node_count() const { return node_count_; }
  ArcId arc_count() const { return static_cast<ArcId>(arcs_.size()); }
  const Arc& arc(ArcId a) const { return arcs_[a]; }
  std::span<const Arc> arcs() const { return arcs_; }
  Value balance(NodeId v) const { return balances_[v]; }
  std::span<const Value> balances() const { return balances_; }

  // Copy of this network with replaced bounds. Sizes must equal arc_count().
  Network WithBounds(std::span<const Value> lower,
                     std::span<const Value> upper) const;

  bool operator==(const Network&) const = default;

 private:
  NodeId node_count_ = 0;
  std::vector<Arc> arcs_;
  std::vector<Value> balances_;
};

// Integer arc-value vector indexed by arc id.
struct Flow {
  std::vector<Value> values;

  Flow() = default;
  explicit Flow(std::vector<Value> v) : values(std::move(v)) {}
  static Flow Zero(ArcId m) { return Flow(std::vector<Value>(m, 0)); }

  std::size_t size() const { return values.size(); }
  Value& operator[](ArcId a) { return values[a]; }
  Value operator[](ArcId a) const { return values[a]; }

  // Lexicographic on arc values; this is the canonical flow order.
  auto operator<=>(const Flow&) const = default;
  bool operator==(const Flow&) const = default;
};

// Throws FlowError with kUnbalancedSupply, kBadBounds, kInfiniteCapacity or
// kDisconnected.
void ValidateNetwork(const Network& net);

// True iff f satisfies all capacity and balance constraints. Throws
// kDimensionMismatch if f does not index exactly the arcs of net.
bool CheckFeasible(const Network& net, const Flow& f);

// Exact sum of cost * flow; throws kArithmeticOverflow.
Value FlowCost(const Network& net, const Flow& f);

// Per-node net outflow (sum out minus sum in) of f.
std::vector<Value> NetOutflow(const Network& net, const Flow& f);

}  // namespace mcfenum

#endif  // MCFENUM_NETWORK_HPP_
