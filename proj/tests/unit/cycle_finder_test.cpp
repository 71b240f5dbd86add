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


#include <optional>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "mcfenum/cycle_finder.hpp"
#include "mcfenum/oracle.hpp"
#include "support/brute_force.hpp"
#include "support/errors.hpp"
#include "support/fixtures.hpp"
#include "support/random_instances.hpp"

namespace mcfenum {
namespace {

using testing::CodeOf;
using testing::kA;
using testing::kB;
using testing::kC;
using testing::kD;
using testing::kE;

int ArcIndex(const ResidualGraph& rg, ArcId origin, Direction dir) {
  const int index = rg.Find(origin, dir);
  EXPECT_GE(index, 0) << "origin " << origin;
  return index;
}

// Arc ids in Fig1Network(): ac 0, ad 1, bd 2, cd 3, ce 4, de 5.
class Fig1Test : public ::testing::Test {
 protected:
  Fig1Test()
      : net_(testing::Fig1Network()),
        rg_(BuildResidual(net_, testing::Fig1Flow())),
        forest_(BuildDfsForest(rg_)) {}

  Network net_;
  ResidualGraph rg_;
  DfsForest forest_;
};

TEST_F(Fig1Test, TreeShape) {
  EXPECT_EQ(forest_.order(), (std::vector<NodeId>{kA, kC, kD, kB, kE}));
  EXPECT_EQ(forest_.parent(kA), -1);
  EXPECT_EQ(forest_.parent(kC), kA);
  EXPECT_EQ(forest_.parent(kD), kC);
  EXPECT_EQ(forest_.parent(kB), kD);
  EXPECT_EQ(forest_.parent(kE), kD);
  EXPECT_EQ(forest_.dfs_number(kA), 1);
  EXPECT_EQ(forest_.dfs_number(kE), 5);
  for (NodeId v = 0; v < 5; ++v) EXPECT_EQ(forest_.root_of(v), kA);
}

TEST_F(Fig1Test, ArcClasses) {
  auto cls = [&](ArcId origin, Direction dir) {
    return forest_.arc_class(ArcIndex(rg_, origin, dir));
  };
  EXPECT_EQ(cls(4, Direction::kBackward), ArcClass::kBackwardLong);   // e -> c
  EXPECT_EQ(cls(5, Direction::kBackward), ArcClass::kBackwardShort);  // e -> d
  EXPECT_EQ(cls(1, Direction::kBackward), ArcClass::kBackwardLong);   // d -> a
  EXPECT_EQ(cls(1, Direction::kForward), ArcClass::kForward);         // a -> d
  EXPECT_EQ(cls(4, Direction::kForward), ArcClass::kForward);         // c -> e
  EXPECT_EQ(cls(0, Direction::kForward), ArcClass::kTree);
  EXPECT_EQ(cls(3, Direction::kForward), ArcClass::kTree);
  EXPECT_EQ(cls(2, Direction::kBackward), ArcClass::kTree);  // d -> b
  EXPECT_EQ(cls(5, Direction::kForward), ArcClass::kTree);
  EXPECT_EQ(testing::CheckArcClasses(rg_, forest_), "");
}

TEST_F(Fig1Test, Sbalow) {
  EXPECT_EQ(forest_.sbalow(kE), forest_.dfs_number(kD));
  EXPECT_EQ(forest_.short_backward_arc(kE), ArcIndex(rg_, 5, Direction::kBackward));
  for (NodeId v : {kA, kB, kC, kD}) {
    EXPECT_EQ(forest_.sbalow(v), forest_.dfs_number(v));
    EXPECT_EQ(forest_.short_backward_arc(v), DfsForest::kNoArc);
  }
  EXPECT_EQ(ComputeSbalow(forest_), forest_.sbalows());
}

TEST_F(Fig1Test, Lca) {
  EXPECT_EQ(forest_.Lca(kB, kE), kD);
  EXPECT_EQ(Lca(forest_, kE, kB), kD);
  EXPECT_EQ(forest_.Lca(kC, kE), kC);
  EXPECT_EQ(forest_.Lca(kA, kB), kA);
  EXPECT_EQ(forest_.Lca(kE, kE), kE);
}

TEST_F(Fig1Test, FirstProperCycleClosesAtLongBackwardArc) {
  const std::optional<Cycle> c = FindProperCycle(rg_, forest_);
  ASSERT_TRUE(c.has_value());
  ASSERT_EQ(c->arcs.size(), 3u);
  EXPECT_TRUE(c->IsClosedWalk());
  EXPECT_TRUE(c->IsProper());
  // (c,d), (d,e), (e,c)
  EXPECT_EQ(c->arcs[0], rg_.arc(ArcIndex(rg_, 3, Direction::kForward)));
  EXPECT_EQ(c->arcs[1], rg_.arc(ArcIndex(rg_, 5, Direction::kForward)));
  EXPECT_EQ(c->arcs[2], rg_.arc(ArcIndex(rg_, 4, Direction::kBackward)));
}

TEST(LcaTest, DifferentTreesThrow) {
  // Arc 0 -> 1 saturated: node 1 cannot reach 0 and is a second root.
  const Network net(2, {testing::MakeArc(0, 1, 0, 1, 0)}, {0, 0});
  const ResidualGraph rg = BuildResidual(net, Flow({0}));
  const DfsForest forest = BuildDfsForest(rg);
  EXPECT_EQ(forest.root_of(1), 0);
  const Network fixed(2, {testing::MakeArc(0, 1, 1, 1, 0)}, {1, -1});
  const DfsForest split = BuildDfsForest(BuildResidual(fixed, Flow({1})));
  EXPECT_EQ(split.root_of(1), 1);
  EXPECT_EQ(CodeOf([&] { split.Lca(0, 1); }), ErrorCode::kDifferentTrees);
}

TEST(FindProperCycleTest, NoneOnTreeNetwork) {
  // Every residual 2-cycle of a tree network is a symmetric pair.
  const Network net(4,
                    {testing::MakeArc(0, 1, 0, 3, 1), testing::MakeArc(2, 1, 0, 3, 1),
                     testing::MakeArc(1, 3, 0, 3, 1)},
                    {1, 0, 1, -2});
  const Flow f({1, 1, 2});
  EXPECT_FALSE(FindProperCycle(BuildResidual(net, f)).has_value());
  EXPECT_FALSE(FindAnotherFeasibleFlow(net, f).has_value());
}

TEST(FindProperCycleTest, ParallelArcsFormProperTwoCycle) {
  const Network net(2, {testing::MakeArc(0, 1, 0, 1, 0), testing::MakeArc(0, 1, 0, 1, 0)},
                    {1, -1});
  const Flow f({1, 0});
  const std::optional<Cycle> c = FindProperCycle(BuildResidual(net, f));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->arcs.size(), 2u);
  EXPECT_TRUE(c->IsProper());
  EXPECT_EQ(FindAnotherFeasibleFlow(net, f), Flow({0, 1}));
}

TEST(FindAnotherFeasibleFlowTest, Fig3Replay) {
  const Network net = testing::Fig3Network();
  const std::optional<Flow> next = FindAnotherFeasibleFlow(net, testing::Fig3Flow());
  ASSERT_TRUE(next.has_value());
  EXPECT_EQ(*next, testing::Fig3Augmented());
  EXPECT_EQ(FlowCost(net, *next), FlowCost(net, testing::Fig3Flow()));
}

TEST(FindAnotherFeasibleFlowTest, RejectsInfeasibleFlow) {
  const Network net = testing::Fig3Network();
  EXPECT_EQ(CodeOf([&] { FindAnotherFeasibleFlow(net, Flow::Zero(7)); }),
            ErrorCode::kInfeasibleFlow);
}

NodeId LcaBruteForce(const DfsForest& forest, NodeId i, NodeId j) {
  std::vector<bool> above(forest.node_count(), false);
  for (NodeId v = i; v != -1; v = forest.parent(v)) above[v] = true;
  for (NodeId v = j; v != -1; v = forest.parent(v)) {
    if (above[v]) return v;
  }
  return -1;
}

TEST(CycleFinderProperty, AgreesWithBruteForce) {
  std::mt19937_64 rng(23);
  testing::InstanceShape shape;
  shape.max_nodes = 30;
  shape.max_arcs = 45;
  shape.max_span = 2;
  for (int trial = 0; trial < 400; ++trial) {
    const testing::Instance inst = testing::RandomInstance(rng, shape);
    const ResidualGraph rg = BuildResidual(inst.net, inst.witness);
    const DfsForest forest = BuildDfsForest(rg);
    SCOPED_TRACE("trial " + std::to_string(trial));
    ASSERT_EQ(testing::CheckArcClasses(rg, forest), "");
    for (NodeId v = 0; v < rg.node_count(); ++v) {
      ASSERT_EQ(forest.sbalow(v), testing::SbalowBruteForce(rg, forest, v));
    }
    for (NodeId i = 0; i < rg.node_count(); ++i) {
      for (NodeId j = 0; j < rg.node_count(); ++j) {
        if (forest.root_of(i) != forest.root_of(j)) continue;
        ASSERT_EQ(forest.Lca(i, j), LcaBruteForce(forest, i, j));
      }
    }
    const std::optional<Cycle> c = FindProperCycle(rg, forest);
    ASSERT_EQ(c.has_value(), testing::HasProperCycleBruteForce(rg));
    if (c) {
      ASSERT_TRUE(c->IsClosedWalk());
      ASSERT_TRUE(c->IsProper());
      const Flow next = Augment(inst.witness, *c, 1);
      ASSERT_TRUE(CheckFeasible(inst.net, next));
      ASSERT_NE(next, inst.witness);
    }
  }
}

TEST(CycleFinderProperty, UniqueFlowIffNoProperCycle) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const testing::Instance inst = testing::RandomInstance(rng);
    const std::size_t feasible = EnumerateAllFeasibleBruteforce(inst.net).size();
    ASSERT_GE(feasible, 1u);
    EXPECT_EQ(FindAnotherFeasibleFlow(inst.net, inst.witness).has_value(), feasible > 1)
        << "trial " << trial;
  }
}

}  // namespace
}  // namespace mcfenum
