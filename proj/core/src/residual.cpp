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

#include "mcfenum/residual.hpp"

#include <map>
#include <set>
#include <utility>

namespace mcfenum {

ResidualGraph BuildResidual(const Network& net, const Flow& f) {
  if (!CheckFeasible(net, f)) {
    throw FlowError(ErrorCode::kInfeasibleFlow,
                    "residual graph requested for an infeasible flow");
  }
  ResidualGraph rg;
  rg.out_.resize(net.node_count());
  rg.forward_.assign(net.arc_count(), -1);
  rg.backward_.assign(net.arc_count(), -1);
  for (ArcId a = 0; a < net.arc_count(); ++a) {
    const Arc& arc = net.arc(a);
    if (f[a] < arc.upper) {
      rg.forward_[a] = static_cast<int>(rg.arcs_.size());
      rg.out_[arc.src].push_back(rg.forward_[a]);
      rg.arcs_.push_back({arc.src, arc.dst, arc.upper - f[a], arc.cost, a,
                          Direction::kForward});
    }
    if (f[a] > arc.lower) {
      rg.backward_[a] = static_cast<int>(rg.arcs_.size());
      rg.out_[arc.dst].push_back(rg.backward_[a]);
      rg.arcs_.push_back({arc.dst, arc.src, f[a] - arc.lower, -arc.cost, a,
                          Direction::kBackward});
    }
  }
  return rg;
}

bool Cycle::IsClosedWalk() const {
  if (arcs.empty()) return false;
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const ResidualArc& next = arcs[(k + 1) % arcs.size()];
    if (arcs[k].dst != next.src) return false;
  }
  return true;
}

bool Cycle::IsProper() const {
  std::set<std::pair<ArcId, Direction>> seen;
  for (const ResidualArc& r : arcs) seen.insert({r.origin, r.direction});
  for (const ResidualArc& r : arcs) {
    Direction other = r.direction == Direction::kForward ? Direction::kBackward
                                                         : Direction::kForward;
    if (seen.contains({r.origin, other})) return false;
  }
  return true;
}

std::vector<Value> Cycle::Incidence(ArcId arc_count) const {
  std::vector<Value> chi(arc_count, 0);
  for (const ResidualArc& r : arcs) {
    if (r.origin < 0 || r.origin >= arc_count) {
      throw FlowError(ErrorCode::kDimensionMismatch, "origin arc out of range");
    }
    chi[r.origin] += r.direction == Direction::kForward ? 1 : -1;
  }
  return chi;
}

Cycle Cycle::Reversed() const {
  Cycle out;
  out.arcs.reserve(arcs.size());
  for (auto it = arcs.rbegin(); it != arcs.rend(); ++it) {
    ResidualArc r = *it;
    std::swap(r.src, r.dst);
    r.cost = -r.cost;
    r.residual_capacity = 0;
    r.direction = r.direction == Direction::kForward ? Direction::kBackward
                                                     : Direction::kForward;
    out.arcs.push_back(r);
  }
  return out;
}

Value CycleCost(const Cycle& c) {
  Value total = 0;
  for (const ResidualArc& r : c.arcs) total = CheckedAdd(total, r.cost);
  return total;
}

Value ReducedCycleCost(const Cycle& c, std::span<const Value> y) {
  Value total = 0;
  for (const ResidualArc& r : c.arcs) {
    Value reduced = CheckedSub(CheckedAdd(r.cost, y[r.src]), y[r.dst]);
    total = CheckedAdd(total, reduced);
  }
  return total;
}

Flow Augment(const Flow& f, const Cycle& c, Value lambda) {
  if (lambda < 1) {
    throw FlowError(ErrorCode::kMalformedCycle, "augmentation amount must be >= 1");
  }
  if (!c.IsClosedWalk()) {
    throw FlowError(ErrorCode::kMalformedCycle, "arcs do not form a closed walk");
  }
  // An origin may appear more than once in a non-simple walk; the residual
  // capacity must cover every traversal.
  std::map<std::pair<ArcId, Direction>, std::pair<Value, Value>> usage;
  for (const ResidualArc& r : c.arcs) {
    auto& [count, cap] = usage[{r.origin, r.direction}];
    ++count;
    cap = r.residual_capacity;
  }
  for (const auto& [key, use] : usage) {
    if (CheckedMul(use.first, lambda) > use.second) {
      throw FlowError(ErrorCode::kCapacityExceeded,
                      "augmentation exceeds residual capacity of arc " +
                          std::to_string(key.first));
    }
  }
  Flow out = f;
  for (const ResidualArc& r : c.arcs) {
    if (r.origin < 0 || static_cast<std::size_t>(r.origin) >= f.size()) {
      throw FlowError(ErrorCode::kDimensionMismatch, "origin arc out of range");
    }
    out[r.origin] = r.direction == Direction::kForward
                        ? CheckedAdd(out[r.origin], lambda)
                        : CheckedSub(out[r.origin], lambda);
  }
  return out;
}

}  // namespace mcfenum
