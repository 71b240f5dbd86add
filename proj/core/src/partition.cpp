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

#include "mcfenum/partition.hpp"

#include <algorithm>
#include <vector>

namespace mcfenum {

Network OverrideList::Apply(const Network& net) const {
  std::vector<Value> lower(net.arc_count()), upper(net.arc_count());
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    lower[a] = net.arc(a).lower;
    upper[a] = net.arc(a).upper;
  }
  ForEach([&](const BoundOverride& o) {
    if (o.arc < 0 || o.arc >= net.arc_count()) {
      throw FlowError(ErrorCode::kDimensionMismatch, "override arc out of range");
    }
    if (o.which == BoundKind::kLower) {
      lower[o.arc] = std::max(lower[o.arc], o.value);
    } else {
      upper[o.arc] = std::min(upper[o.arc], o.value);
    }
  });
  return net.WithBounds(lower, upper);
}

std::pair<BoundOverride, BoundOverride> PartitionSolutionSpace(const Flow& keep,
                                                               const Flow& other) {
  if (keep.size() != other.size()) {
    throw FlowError(ErrorCode::kDimensionMismatch, "flow sizes differ");
  }
  for (std::size_t k = 0; k < keep.size(); ++k) {
    const ArcId a = static_cast<ArcId>(k);
    if (keep[a] == other[a]) continue;
    if (keep[a] < other[a]) {
      return {BoundOverride{a, BoundKind::kUpper, keep[a]},
              BoundOverride{a, BoundKind::kLower, keep[a] + 1}};
    }
    return {BoundOverride{a, BoundKind::kLower, keep[a]},
            BoundOverride{a, BoundKind::kUpper, keep[a] - 1}};
  }
  throw FlowError(ErrorCode::kIdenticalFlows, "cannot partition on equal flows");
}

}  // namespace mcfenum
