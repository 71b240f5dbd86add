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
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "gtest/gtest.h"
#include "mcfenum/aof.hpp"
#include "mcfenum/mcf.hpp"
#include "mcfenum/oracle.hpp"
#include "mcfenum/partition.hpp"
#include "support/errors.hpp"
#include "support/fixtures.hpp"
#include "support/random_instances.hpp"

namespace mcfenum {
namespace {

using testing::CodeOf;

std::vector<Flow> Collect(const Network& net, EnumerationStats* stats = nullptr,
                          std::optional<std::uint64_t> limit = {}) {
  std::vector<Flow> out;
  const EnumerationStats s =
      EnumerateAllOptimal(net, [&](const Flow& f) { out.push_back(f); }, limit);
  if (stats != nullptr) *stats = s;
  return out;
}

TEST(PartitionTest, SplitsOnSmallestDifferingArc) {
  const auto [keep, other] = PartitionSolutionSpace(Flow({1, 2, 3}), Flow({1, 4, 0}));
  EXPECT_EQ(keep, (BoundOverride{1, BoundKind::kUpper, 2}));
  EXPECT_EQ(other, (BoundOverride{1, BoundKind::kLower, 3}));
  const auto [keep2, other2] = PartitionSolutionSpace(Flow({5, 0}), Flow({2, 0}));
  EXPECT_EQ(keep2, (BoundOverride{0, BoundKind::kLower, 5}));
  EXPECT_EQ(other2, (BoundOverride{0, BoundKind::kUpper, 4}));
  EXPECT_EQ(CodeOf([] { PartitionSolutionSpace(Flow({1}), Flow({1})); }),
            ErrorCode::kIdenticalFlows);
}

TEST(OverrideListTest, AppliesTighteningOnly) {
  const Network net(2, {testing::MakeArc(0, 1, 0, 9, 1)}, {0, 0});
  const OverrideList base;
  const OverrideList a = base.Push({0, BoundKind::kUpper, 6});
  const OverrideList b = a.Push({0, BoundKind::kLower, 2});
  const OverrideList c = b.Push({0, BoundKind::kUpper, 8});
  EXPECT_EQ(base.size(), 0u);
  EXPECT_EQ(c.size(), 3u);
  EXPECT_EQ(base.Apply(net), net);
  const Arc applied = c.Apply(net).arc(0);
  EXPECT_EQ(applied.lower, 2);
  EXPECT_EQ(applied.upper, 6);
  std::vector<Value> seen;
  c.ForEach([&](const BoundOverride& o) { seen.push_back(o.value); });
  EXPECT_EQ(seen, (std::vector<Value>{8, 2, 6}));
}

TEST(ReduceNetworkTest, Fig7a) {
  const Network net = testing::Fig7aNetwork();
  const Flow f = testing::Fig7aFlow();
  const std::vector<Value> reduced = ComputeReducedCosts(net, ComputeNodePotentials(net, f).y);
  const ReducedNetwork r = ReduceNetwork(net, f, reduced);
  EXPECT_EQ(r.removed_arcs, (std::vector<ArcId>{0, 1}));
  EXPECT_EQ(r.kept_arcs, (std::vector<ArcId>{2, 3, 4, 5, 6}));
  EXPECT_EQ(r.network.arc_count(), 5);
  EXPECT_TRUE(CheckFeasible(r.network, r.Restrict(f)));
  EXPECT_EQ(r.Splice(f, r.Restrict(f)), f);
}

TEST(ReduceNetworkTest, MovesRemovedFlowIntoBalances) {
  // Arc 0 is forced to carry 2 and has positive reduced cost.
  const Network net(3,
                    {testing::MakeArc(0, 1, 2, 2, 5), testing::MakeArc(1, 2, 0, 3, 0),
                     testing::MakeArc(0, 2, 0, 3, 0)},
                    {3, 0, -3});
  const Flow f({2, 2, 1});
  const ReducedNetwork r = ReduceNetwork(net, f, std::vector<Value>{5, 0, 0});
  EXPECT_EQ(r.removed_arcs, (std::vector<ArcId>{0}));
  EXPECT_EQ(std::vector<Value>(r.network.balances().begin(), r.network.balances().end()),
            (std::vector<Value>{1, 2, -3}));
}

TEST(FindAnotherOptimalFlowTest, Fig7aAndFig7b) {
  for (const bool wide : {true, false}) {
    const Network net = wide ? testing::Fig7aNetwork() : testing::Fig7bNetwork();
    const Flow f = wide ? testing::Fig7aFlow() : testing::Fig7bFlow();
    const std::vector<Value> reduced =
        ComputeReducedCosts(net, ComputeNodePotentials(net, f).y);
    const std::optional<Flow> next = FindAnotherOptimalFlow(net, f, reduced);
    EXPECT_EQ(next.has_value(), wide);
    if (next) {
      EXPECT_NE(*next, f);
      EXPECT_TRUE(CheckFeasible(net, *next));
      EXPECT_EQ(FlowCost(net, *next), FlowCost(net, f));
    }
  }
}

TEST(EnumerateAllOptimalTest, Fig7aHasElevenFlows) {
  const Network net = testing::Fig7aNetwork();
  EnumerationStats stats;
  std::vector<Flow> flows = Collect(net, &stats);
  EXPECT_EQ(stats.count, 11u);
  EXPECT_LE(stats.calls, 3 * stats.count);
  EXPECT_FALSE(stats.limit_reached);
  std::sort(flows.begin(), flows.end());
  EXPECT_EQ(flows, EnumerateAllOptimalBruteforce(net));
  // The flows differ by k units around c -> d -> e -> c.
  std::set<Value> on_cd;
  for (const Flow& f : flows) on_cd.insert(f[4]);
  EXPECT_EQ(on_cd.size(), 11u);
  EXPECT_EQ(*on_cd.rbegin(), 10);
}

TEST(EnumerateAllOptimalTest, Fig7bIsUnique) {
  EnumerationStats stats;
  const std::vector<Flow> flows = Collect(testing::Fig7bNetwork(), &stats);
  EXPECT_EQ(flows, (std::vector<Flow>{testing::Fig7bFlow()}));
  EXPECT_EQ(stats.calls, 1u);
}

TEST(EnumerateAllOptimalTest, Fig3AndExample3) {
  EXPECT_EQ(Collect(testing::Fig3Network()).size(),
            EnumerateAllOptimalBruteforce(testing::Fig3Network()).size());
  EXPECT_EQ(Collect(testing::Example3Network()), (std::vector<Flow>{Flow({1, 1, 0})}));
}

TEST(EnumerateAllOptimalTest, LimitStopsEarly) {
  EnumerationStats stats;
  EXPECT_EQ(Collect(testing::Fig7aNetwork(), &stats, 4).size(), 4u);
  EXPECT_TRUE(stats.limit_reached);
  EXPECT_EQ(Collect(testing::Fig7aNetwork(), &stats, 11).size(), 11u);
  EXPECT_FALSE(stats.limit_reached);
}

TEST(EnumerateAllOptimalTest, InfeasibleThrows) {
  const Network net(2, {testing::MakeArc(0, 1, 0, 1, 0)}, {2, -2});
  EXPECT_EQ(CodeOf([&] { Collect(net); }), ErrorCode::kInfeasible);
}

TEST(AofProperty, MatchesOracle) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const testing::Instance inst = testing::RandomInstance(rng);
    SCOPED_TRACE("trial " + std::to_string(trial));
    EnumerationStats stats;
    std::vector<Flow> flows = Collect(inst.net, &stats);
    const std::size_t emitted = flows.size();
    std::sort(flows.begin(), flows.end());
    ASSERT_EQ(std::unique(flows.begin(), flows.end()), flows.end()) << "duplicate flow";
    ASSERT_EQ(flows, EnumerateAllOptimalBruteforce(inst.net));
    ASSERT_EQ(stats.count, emitted);
    ASSERT_LE(stats.calls, 3 * stats.count);
  }
}

}  // namespace
}  // namespace mcfenum
