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

#ifndef MCFENUM_PARTITION_HPP_
#define MCFENUM_PARTITION_HPP_

#include <memory>
#include <utility>

#include "mcfenum/network.hpp"

namespace mcfenum {

enum class BoundKind { kLower, kUpper };

struct BoundOverride {
  ArcId arc = 0;
  BoundKind which = BoundKind::kUpper;
  Value value = 0;

  bool operator==(const BoundOverride&) const = default;
};

// Persistent singly linked list of overrides. Children of a subproblem share
// their parent's tail, so a search tree of depth d stores O(d) nodes per path.
class OverrideList {
 public:
  OverrideList() = default;

  OverrideList Push(BoundOverride o) const {
    OverrideList out;
    out.head_ = std::make_shared<const Node>(Node{o, head_});
    out.size_ = size_ + 1;
    return out;
  }

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  // Visits overrides newest first.
  template <typename Fn>
  void ForEach(Fn&& fn) const {
    for (const Node* n = head_.get(); n != nullptr; n = n->next.get()) fn(n->value);
  }

  // `net` with every override applied. Overrides only ever tighten, so each
  // one is applied as max (lower) or min (upper).
  Network Apply(const Network& net) const;

 private:
  struct Node {
    BoundOverride value;
    std::shared_ptr<const Node> next;
  };
  std::shared_ptr<const Node> head_;
  std::size_t size_ = 0;
};

// Binary split of a solution space that contains two distinct flows `keep`
// and `other`, on the smallest arc id a where they differ. The first
// override keeps `keep` (u_a := keep_a if keep_a < other_a, else
// l_a := keep_a); the second keeps `other` (l_a := keep_a + 1, or
// u_a := keep_a - 1). Throws kIdenticalFlows if the flows are equal.
std::pair<BoundOverride, BoundOverride> PartitionSolutionSpace(const Flow& keep,
                                                               const Flow& other);

}  // namespace mcfenum

#endif  // MCFENUM_PARTITION_HPP_
