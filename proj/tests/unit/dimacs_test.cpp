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


#include <random>
#include <string>

#include "gtest/gtest.h"
#include "mcfenum/dimacs.hpp"
#include "support/errors.hpp"
#include "support/fixtures.hpp"
#include "support/random_instances.hpp"

namespace mcfenum {
namespace {

using testing::CodeOf;

TEST(ParseDimacsTest, DataFilesMatchFixtures) {
  EXPECT_EQ(ParseDimacs(testing::ReadData("fig3.min")), testing::Fig3Network());
  EXPECT_EQ(ParseDimacs(testing::ReadData("fig7a.min")), testing::Fig7aNetwork());
  EXPECT_EQ(ParseDimacs(testing::ReadData("fig7b.min")), testing::Fig7bNetwork());
  EXPECT_EQ(ParseDimacs(testing::ReadData("example3.min")), testing::Example3Network());
}

TEST(ParseDimacsTest, CommentsBlankLinesAndCrlf) {
  const Network net = ParseDimacs("c hi\r\n\r\np min 2 1\r\n  n 1 4\r\nn 2 -4\na 1 2 0 9 -1");
  EXPECT_EQ(net, Network(2, {testing::MakeArc(0, 1, 0, 9, -1)}, {4, -4}));
}

TEST(ParseDimacsTest, SyntaxErrorNamesLineAndColumn) {
  try {
    ParseDimacs("p min 2 1\na 1 2 0 x 1\n");
    FAIL() << "no error";
  } catch (const FlowError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSyntaxError);
    EXPECT_NE(std::string(e.what()).find("line 2, column 9"), std::string::npos) << e.what();
  }
}

TEST(ParseDimacsTest, Errors) {
  EXPECT_EQ(CodeOf([] { ParseDimacs("a 1 2 0 1 1\n"); }), ErrorCode::kSyntaxError);
  EXPECT_EQ(CodeOf([] { ParseDimacs("c nothing\n"); }), ErrorCode::kSyntaxError);
  EXPECT_EQ(CodeOf([] { ParseDimacs("p max 2 1\n"); }), ErrorCode::kSyntaxError);
  EXPECT_EQ(CodeOf([] { ParseDimacs("p min 2 0\nx\n"); }), ErrorCode::kSyntaxError);
  EXPECT_EQ(CodeOf([] { ParseDimacs("p min 2 1\na 1 2 0 1\n"); }), ErrorCode::kSyntaxError);
  EXPECT_EQ(CodeOf([] { ParseDimacs("p min 2 0\np min 2 0\n"); }),
            ErrorCode::kDuplicateProblemLine);
  EXPECT_EQ(CodeOf([] { ParseDimacs("p min 2 2\na 1 2 0 1 1\n"); }),
            ErrorCode::kArcCountMismatch);
  EXPECT_EQ(CodeOf([] { ParseDimacs("p min 2 1\na 1 3 0 1 1\n"); }),
            ErrorCode::kNodeIdOutOfRange);
  EXPECT_EQ(CodeOf([] { ParseDimacs("p min 2 0\nn 0 1\n"); }), ErrorCode::kNodeIdOutOfRange);
  EXPECT_EQ(CodeOf([] { ParseDimacs("p min 2 1\na 2 2 0 1 1\n"); }), ErrorCode::kSelfLoop);
}

TEST(DimacsProperty, RoundTrip) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    const Network net = testing::RandomInstance(rng).net;
    ASSERT_EQ(ParseDimacs(WriteDimacs(net)), net) << WriteDimacs(net);
  }
}

}  // namespace
}  // namespace mcfenum
