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

#include "mcfenum/network.hpp"

#include <numeric>
#include <string>

namespace mcfenum {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnbalancedSupply: return "UnbalancedSupply";
    case ErrorCode::kBadBounds: return "BadBounds";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kInfiniteCapacity: return "InfiniteCapacity";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kNodeIdOutOfRange: return "NodeIdOutOfRange";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kArithmeticOverflow: return "ArithmeticOverflow";
    case ErrorCode::kInfeasibleFlow: return "InfeasibleFlow";
    case ErrorCode::kCapacityExceeded: return "CapacityExceeded";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kNegativeCycleDetected: return "NegativeCycleDetected";
    case ErrorCode::kNegativeReducedCost: return "NegativeReducedCost";
    case ErrorCode::kDifferentTrees: return "DifferentTrees";
    case ErrorCode::kIdenticalFlows: return "IdenticalFlows";
    case ErrorCode::kArcInTree: return "ArcInTree";
    case ErrorCode::kCycleEntirelyInTree: return "CycleEntirelyInTree";
    case ErrorCode::kMalformedCycle: return "MalformedCycle";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kDuplicateProblemLine: return "DuplicateProblemLine";
    case ErrorCode::kArcCountMismatch: return "ArcCountMismatch";
  }
  return "Unknown";
}

Network::Network(NodeId node_count, std::vector<Arc> arcs,
                 std::vector<Value> balances)
    : node_count_(node_count),
      arcs_(std::move(arcs)),
      balances_(std::move(balances)) {
  if (node_count_ < 0) {
    throw FlowError(ErrorCode::kNodeIdOutOfRange, "negative node count");
  }
  if (balances_.size() != static_cast<std::size_t>(node_count_)) {
    throw FlowError(ErrorCode::kDimensionMismatch,
                    "balance vector size differs from node count");
  }
  for (std::size_t a = 0; a < arcs_.size(); ++a) {
    const Arc& arc = arcs_[a];
    if (arc.src < 0 || arc.src >= node_count_ || arc.dst < 0 ||
        arc.dst >= node_count_) {
      throw FlowError(ErrorCode::kNodeIdOutOfRange,
                      "arc " + std::to_string(a) + " has an endpoint out of range");
    }
    if (arc.src == arc.dst) {
      throw FlowError(ErrorCode::kSelfLoop,
                      "arc " + std::to_string(a) + " is a self-loop");
    }
  }
}

Network Network::WithBounds(std::span<const Value> lower,
                            std::span<const Value> upper) const {
  if (lower.size() != arcs_.size() || upper.size() != arcs_.size()) {
    throw FlowError(ErrorCode::kDimensionMismatch, "bound vector size");
  }
  Network out = *this;
  for (std::size_t a = 0; a < arcs_.size(); ++a) {
    out.arcs_[a].lower = lower[a];
    out.arcs_[a].upper = upper[a];
  }
  return out;
}

void ValidateNetwork(const Network& net) {
  Value total = 0;
  for (Value b : net.balances()) total = CheckedAdd(total, b);
  if (total != 0) {
    throw FlowError(ErrorCode::kUnbalancedSupply,
                    "balances sum to " + std::to_string(total));
  }
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    const Arc& arc = net.arc(a);
    if (arc.lower < 0 || arc.lower > arc.upper) {
      throw FlowError(ErrorCode::kBadBounds,
                      "arc " + std::to_string(a) + " needs 0 <= lower <= upper");
    }
    if (arc.upper == kInfinity) {
      throw FlowError(ErrorCode::kInfiniteCapacity,
                      "arc " + std::to_string(a) + " has infinite capacity");
    }
  }
  // Connectivity of the underlying undirected graph.
  const NodeId n = net.node_count();
  if (n == 0) return;
  std::vector<NodeId> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](NodeId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  NodeId components = n;
  for (const Arc& arc : net.arcs()) {
    NodeId x = find(arc.src), y = find(arc.dst);
    if (x != y) {
      parent[x] = y;
      --components;
    }
  }
  if (components != 1) {
    throw FlowError(ErrorCode::kDisconnected,
                    std::to_string(components) + " connected components");
  }
}

std::vector<Value> NetOutflow(const Network& net, const Flow& f) {
  if (f.size() != static_cast<std::size_t>(net.arc_count())) {
    throw FlowError(ErrorCode::kDimensionMismatch,
                    "flow has " + std::to_string(f.size()) + " values, network has " +
                        std::to_string(net.arc_count()) + " arcs");
  }
  std::vector<Value> out(net.node_count(), 0);
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    const Arc& arc = net.arc(a);
    out[arc.src] = CheckedAdd(out[arc.src], f[a]);
    out[arc.dst] = CheckedSub(out[arc.dst], f[a]);
  }
  return out;
}

bool CheckFeasible(const Network& net, const Flow& f) {
  std::vector<Value> out = NetOutflow(net, f);
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    if (f[a] < net.arc(a).lower || f[a] > net.arc(a).upper) return false;
  }
  for (NodeId v = 0; v < net.node_count(); ++v) {
    if (out[v] != net.balance(v)) return false;
  }
  return true;
}

Value FlowCost(const Network& net, const Flow& f) {
  if (f.size() != static_cast<std::size_t>(net.arc_count())) {
    throw FlowError(ErrorCode::kDimensionMismatch, "flow size");
  }
  Value total = 0;
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    total = CheckedAdd(total, CheckedMul(net.arc(a).cost, f[a]));
  }
  return total;
}

}  // namespace mcfenum
