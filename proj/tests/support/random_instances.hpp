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

// Random connected networks that are feasible by construction: a random flow
// inside the bounds is drawn first and the balances are read off it.

#ifndef MCFENUM_TESTS_RANDOM_INSTANCES_HPP_
#define MCFENUM_TESTS_RANDOM_INSTANCES_HPP_

#include <algorithm>
#include <random>
#include <vector>

#include "mcfenum/network.hpp"

namespace mcfenum::testing {

struct InstanceShape {
  NodeId min_nodes = 2;
  NodeId max_nodes = 6;
  ArcId max_arcs = 10;
  Value max_lower = 2;
  Value max_span = 3;
  Value max_abs_cost = 3;
};

struct Instance {
  Network net;
  // The flow the balances were derived from; feasible, not optimal.
  Flow witness;
};

inline Instance RandomInstance(std::mt19937_64& rng, const InstanceShape& shape = {}) {
  auto uniform = [&rng](auto lo, auto hi) {
    return std::uniform_int_distribution<decltype(lo)>(lo, hi)(rng);
  };
  const NodeId n = uniform(shape.min_nodes, shape.max_nodes);
  // A single node admits no arcs (no self-loops).
  const ArcId m = n == 1 ? 0
                         : uniform(static_cast<ArcId>(n - 1),
                                   std::max<ArcId>(n - 1, shape.max_arcs));
  std::vector<Arc> arcs;
  auto add_arc = [&](NodeId x, NodeId y) {
    Arc arc;
    if (uniform(0, 1) == 1) std::swap(x, y);
    arc.src = x;
    arc.dst = y;
    arc.lower = uniform(Value{0}, shape.max_lower);
    arc.upper = arc.lower + uniform(Value{0}, shape.max_span);
    arc.cost = uniform(-shape.max_abs_cost, shape.max_abs_cost);
    arcs.push_back(arc);
  };
  for (NodeId v = 1; v < n; ++v) add_arc(uniform(NodeId{0}, v - 1), v);
  while (static_cast<ArcId>(arcs.size()) < m) {
    const NodeId x = uniform(NodeId{0}, n - 1);
    const NodeId y = uniform(NodeId{0}, n - 1);
    if (x != y) add_arc(x, y);
  }
  std::shuffle(arcs.begin(), arcs.end(), rng);
  Flow flow = Flow::Zero(m);
  std::vector<Value> balances(n, 0);
  for (ArcId a = 0; a < m; ++a) {
    flow[a] = uniform(arcs[a].lower, arcs[a].upper);
    balances[arcs[a].src] += flow[a];
    balances[arcs[a].dst] -= flow[a];
  }
  return {Network(n, std::move(arcs), std::move(balances)), std::move(flow)};
}

}  // namespace mcfenum::testing

#endif  // MCFENUM_TESTS_RANDOM_INSTANCES_HPP_
