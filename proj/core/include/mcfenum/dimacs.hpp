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

// DIMACS "min" format:
//
//   c <comment>
//   p min <nodes> <arcs>
//   n <id> <balance>                 (omitted nodes have balance 0)
//   a <src> <dst> <lower> <cap> <cost>
//
// Node ids are 1-based in the file and 0-based in the Network. Arc ids follow
// the order of the `a` lines.

#ifndef MCFENUM_DIMACS_HPP_
#define MCFENUM_DIMACS_HPP_

#include <string>
#include <string_view>

#include "mcfenum/network.hpp"

namespace mcfenum {

// Throws kSyntaxError (message carries line and column),
// kDuplicateProblemLine, kArcCountMismatch, kNodeIdOutOfRange, kSelfLoop.
Network ParseDimacs(std::string_view text);

std::string WriteDimacs(const Network& net);

}  // namespace mcfenum

#endif  // MCFENUM_DIMACS_HPP_
