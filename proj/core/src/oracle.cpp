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

#include "mcfenum/oracle.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace mcfenum {
namespace {

class Backtracker {
 public:
  Backtracker(const Network& net, const EnumerationBudget& budget)
      : net_(net), budget_(budget), current_(Flow::Zero(net.arc_count())) {
    const NodeId n = net.node_count();
    // need_[v]: outflow minus inflow still required at v.
    need_.assign(net.balances().begin(), net.balances().end());
    slack_low_.assign(n, 0);
    slack_high_.assign(n, 0);
    for (const Arc& arc : net.arcs()) {
      slack_low_[arc.src] += arc.lower;
      slack_high_[arc.src] += arc.upper;
      slack_low_[arc.dst] -= arc.upper;
      slack_high_[arc.dst] -= arc.lower;
    }
  }

  std::vector<Flow> Run() {
    if (Reachable()) Visit(0);
    return std::move(found_);
  }

 private:
  // Every node can still meet its balance with the unassigned arcs.
  bool Reachable() const {
    for (NodeId v = 0; v < net_.node_count(); ++v) {
      if (need_[v] < slack_low_[v] || need_[v] > slack_high_[v]) return false;
    }
    return true;
  }

  bool NodeOk(NodeId v) const {
    return slack_low_[v] <= need_[v] && need_[v] <= slack_high_[v];
  }

  void Visit(ArcId a) {
    if (++states_ > budget_.max_states) {
      throw FlowError(ErrorCode::kBudgetExceeded,
                      "more than " + std::to_string(budget_.max_states) +
                          " search states");
    }
    if (a == net_.arc_count()) {
      if (found_.size() >= budget_.max_flows) {
        throw FlowError(ErrorCode::kBudgetExceeded,
                        "more than " + std::to_string(budget_.max_flows) +
                            " flows");
      }
      found_.push_back(current_);
      return;
    }
    const Arc& arc = net_.arc(a);
    slack_low_[arc.src] -= arc.lower;
    slack_high_[arc.src] -= arc.upper;
    slack_low_[arc.dst] += arc.upper;
    slack_high_[arc.dst] += arc.lower;
    for (Value x = arc.lower; x <= arc.upper; ++x) {
      current_[a] = x;
      need_[arc.src] -= x;
      need_[arc.dst] += x;
      if (NodeOk(arc.src) && NodeOk(arc.dst)) Visit(a + 1);
      need_[arc.src] += x;
      need_[arc.dst] -= x;
    }
    current_[a] = 0;
    slack_low_[arc.src] += arc.lower;
    slack_high_[arc.src] += arc.upper;
    slack_low_[arc.dst] -= arc.upper;
    slack_high_[arc.dst] -= arc.lower;
  }

  const Network& net_;
  EnumerationBudget budget_;
  Flow current_;
  std::vector<Value> need_;
  // Range of net outflow the unassigned arcs can still contribute.
  std::vector<Value> slack_low_;
  std::vector<Value> slack_high_;
  std::uint64_t states_ = 0;
  std::vector<Flow> found_;
};

}  // namespace

std::vector<Flow> EnumerateAllFeasibleBruteforce(const Network& net,
                                                 const EnumerationBudget& budget) {
  std::vector<Flow> out = Backtracker(net, budget).Run();
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Flow> EnumerateAllOptimalBruteforce(const Network& net,
                                                const EnumerationBudget& budget) {
  std::vector<Flow> all = EnumerateAllFeasibleBruteforce(net, budget);
  if (all.empty()) return all;
  Value best = kInfinity;
  for (const Flow& f : all) best = std::min(best, FlowCost(net, f));
  std::vector<Flow> out;
  for (Flow& f : all) {
    if (FlowCost(net, f) == best) out.push_back(std::move(f));
  }
  return out;
}

std::vector<Flow> KBestBruteforce(const Network& net, std::uint64_t k,
                                  const EnumerationBudget& budget) {
  std::vector<Flow> all = EnumerateAllFeasibleBruteforce(net, budget);
  std::vector<std::pair<Value, Flow>> keyed;
  keyed.reserve(all.size());
  for (Flow& f : all) keyed.emplace_back(FlowCost(net, f), std::move(f));
  std::stable_sort(keyed.begin(), keyed.end());
  std::vector<Flow> out;
  for (std::size_t i = 0; i < keyed.size() && i < k; ++i) {
    out.push_back(std::move(keyed[i].second));
  }
  return out;
}

}  // namespace mcfenum
