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

// Exhaustive reference enumeration for small networks.

#ifndef MCFENUM_ORACLE_HPP_
#define MCFENUM_ORACLE_HPP_

#include <cstdint>
#include <vector>

#include "mcfenum/network.hpp"

namespace mcfenum {

struct EnumerationBudget {
  std::uint64_t max_states = 50'000'000;
  std::uint64_t max_flows = 1'000'000;
};

// Every feasible integer flow, sorted lexicographically. Backtracks over arcs
// in id order and prunes on node balances. Throws kBudgetExceeded.
std::vector<Flow> EnumerateAllFeasibleBruteforce(const Network& net,
                                                 const EnumerationBudget& budget = {});

// The minimum-cost subset of the above, sorted lexicographically.
std::vector<Flow> EnumerateAllOptimalBruteforce(const Network& net,
                                                const EnumerationBudget& budget = {});

// The first K flows by (cost, lexicographic order).
std::vector<Flow> KBestBruteforce(const Network& net, std::uint64_t k,
                                  const EnumerationBudget& budget = {});

}  // namespace mcfenum

#endif  // MCFENUM_ORACLE_HPP_
