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

// Enumeration of all optimal integer flows.
//
// Optimal flows differ only on arcs of zero reduced cost. Removing the other
// arcs (and moving the flow they carry into the balances) leaves a reduced
// network D' whose feasible flows are exactly the optimal flows of the input
// once spliced with the fixed flow on the removed arcs. Enumeration then
// finds one more feasible flow of D' at a time by a proper-cycle search and
// splits the solution space on an arc where the two flows differ.

#ifndef MCFENUM_AOF_HPP_
#define MCFENUM_AOF_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mcfenum/network.hpp"
#include "mcfenum/partition.hpp"

namespace mcfenum {

struct ReducedNetwork {
  // D': the kept arcs renumbered 0..m'-1 in ascending original id, with the
  // adjusted balances b'.
  Network network;
  // A'; kept_arcs[k] is the original id of arc k of `network`.
  std::vector<ArcId> kept_arcs;
  // X, the arcs with nonzero reduced cost.
  std::vector<ArcId> removed_arcs;

  // Values of f on A', indexed like `network`.
  Flow Restrict(const Flow& f) const;
  // Flow on the original network that equals `reduced` on A' and `base`
  // on X.
  Flow Splice(const Flow& base, const Flow& reduced) const;
};

ReducedNetwork ReduceNetwork(const Network& net, const Flow& f,
                             std::span<const Value> reduced_costs);

// An optimal flow different from f, or nullopt iff f is the unique optimum.
// f must be optimal and reduced_costs must come from optimal potentials.
std::optional<Flow> FindAnotherOptimalFlow(const Network& net, const Flow& f,
                                           std::span<const Value> reduced_costs);

// Subproblem of the enumeration: bound overrides on D' (arc ids of the
// reduced network) and a feasible witness there.
struct Subproblem {
  OverrideList overrides;
  Flow witness;
};

struct EnumerationStats {
  std::uint64_t count = 0;
  // Number of one-more-flow searches, one per explored subproblem.
  std::uint64_t calls = 0;
  // True if enumeration stopped at the limit while more flows exist.
  bool limit_reached = false;
};

using FlowSink = std::function<void(const Flow&)>;

// Streams every optimal integer flow exactly once to `sink`: the solver's
// optimal flow first, then new flows in depth-first partition order. Stops
// after `limit` flows if given. Throws kInfeasible.
EnumerationStats EnumerateAllOptimal(const Network& net, const FlowSink& sink,
                                     std::optional<std::uint64_t> limit = {});

// Same, starting from a known optimal flow and its reduced costs.
EnumerationStats EnumerateAllOptimal(const Network& net, const Flow& optimal,
                                     std::span<const Value> reduced_costs,
                                     const FlowSink& sink,
                                     std::optional<std::uint64_t> limit = {});

}  // namespace mcfenum

#endif  // MCFENUM_AOF_HPP_
