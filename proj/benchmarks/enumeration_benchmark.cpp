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


#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "benchmark/benchmark.h"
#include "mcfenum/aof.hpp"
#include "mcfenum/cycle_finder.hpp"
#include "mcfenum/kbest.hpp"
#include "mcfenum/mcf.hpp"

namespace mcfenum {
namespace {

struct Generated {
  Network net;
  Flow feasible;
};

// Connected network with n nodes and about 3n arcs. Balances come from a
// random flow inside the bounds, so the network is always feasible.
Generated Generate(NodeId n, Value max_abs_cost, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&rng](auto lo, auto hi) {
    return std::uniform_int_distribution<decltype(lo)>(lo, hi)(rng);
  };
  std::vector<Arc> arcs;
  auto add = [&](NodeId x, NodeId y) {
    if (uniform(0, 1) == 1) std::swap(x, y);
    const Value upper = uniform(Value{1}, Value{4});
    arcs.push_back(Arc{x, y, 0, upper, uniform(-max_abs_cost, max_abs_cost)});
  };
  for (NodeId v = 1; v < n; ++v) add(uniform(NodeId{0}, v - 1), v);
  while (static_cast<NodeId>(arcs.size()) < 3 * n) {
    const NodeId x = uniform(NodeId{0}, n - 1);
    const NodeId y = uniform(NodeId{0}, n - 1);
    if (x != y) add(x, y);
  }
  Flow f = Flow::Zero(static_cast<ArcId>(arcs.size()));
  std::vector<Value> balances(n, 0);
  for (ArcId a = 0; a < static_cast<ArcId>(arcs.size()); ++a) {
    f[a] = uniform(arcs[a].lower, arcs[a].upper);
    balances[arcs[a].src] += f[a];
    balances[arcs[a].dst] -= f[a];
  }
  return {Network(n, std::move(arcs), std::move(balances)), std::move(f)};
}

void BM_FindAnotherFeasibleFlow(benchmark::State& state) {
  const Generated g = Generate(static_cast<NodeId>(state.range(0)), 5, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(FindAnotherFeasibleFlow(g.net, g.feasible));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FindAnotherFeasibleFlow)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

// Zero costs make every feasible flow optimal, so the limit is always hit.
void BM_EnumerateAllOptimal(benchmark::State& state) {
  const Generated g = Generate(static_cast<NodeId>(state.range(0)), 0, 11);
  const Flow optimal = SolveMinCostFlow(g.net);
  const std::vector<Value> reduced =
      ComputeReducedCosts(g.net, ComputeNodePotentials(g.net, optimal).y);
  constexpr std::uint64_t kLimit = 1000;
  std::uint64_t emitted = 0;
  for (auto _ : state) {
    const EnumerationStats stats = EnumerateAllOptimal(
        g.net, optimal, reduced, [](const Flow& f) { benchmark::DoNotOptimize(f); }, kLimit);
    emitted += stats.count;
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(emitted));
}
BENCHMARK(BM_EnumerateAllOptimal)->RangeMultiplier(4)->Range(16, 256);

void BM_FindKBestFlows(benchmark::State& state) {
  const Generated g = Generate(static_cast<NodeId>(state.range(0)), 5, 13);
  const auto k = static_cast<std::uint64_t>(state.range(1));
  for (auto _ : state) {
    FindKBestFlows(g.net, k, [](const Flow& f) { benchmark::DoNotOptimize(f); });
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * k));
}
BENCHMARK(BM_FindKBestFlows)->ArgsProduct({{8, 16, 32, 64}, {10, 50}});

}  // namespace
}  // namespace mcfenum

// The distro's benchmark_main archive is LTO bytecode from another compiler
// build, so the entry point is defined here.
BENCHMARK_MAIN();
