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

#ifndef MCFENUM_TYPES_HPP_
#define MCFENUM_TYPES_HPP_

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mcfenum {

using NodeId = std::int32_t;
using ArcId = std::int32_t;
// Flow values, capacities, balances and costs.
using Value = std::int64_t;

inline constexpr Value kInfinity = std::numeric_limits<Value>::max();

enum class ErrorCode {
  kUnbalancedSupply,
  kBadBounds,
  kDisconnected,
  kInfiniteCapacity,
  kSelfLoop,
  kNodeIdOutOfRange,
  kDimensionMismatch,
  kArithmeticOverflow,
  kInfeasibleFlow,
  kCapacityExceeded,
  kInfeasible,
  kNegativeCycleDetected,
  kNegativeReducedCost,
  kDifferentTrees,
  kIdenticalFlows,
  kArcInTree,
  kCycleEntirelyInTree,
  kMalformedCycle,
  kBudgetExceeded,
  kSyntaxError,
  kDuplicateProblemLine,
  kArcCountMismatch,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every library failure is reported as a FlowError carrying a machine
// readable code.
class FlowError : public std::runtime_error {
 public:
  FlowError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline Value CheckedAdd(Value a, Value b) {
  Value out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw FlowError(ErrorCode::kArithmeticOverflow, "addition overflows");
  }
  return out;
}

inline Value CheckedSub(Value a, Value b) {
  Value out;
  if (__builtin_sub_overflow(a, b, &out)) {
    throw FlowError(ErrorCode::kArithmeticOverflow, "subtraction overflows");
  }
  return out;
}

inline Value CheckedMul(Value a, Value b) {
  Value out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw FlowError(ErrorCode::kArithmeticOverflow, "multiplication overflows");
  }
  return out;
}

}  // namespace mcfenum

#endif  // MCFENUM_TYPES_HPP_
