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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "json.hpp"
#include "mcfenum/aof.hpp"
#include "mcfenum/bounds.hpp"
#include "mcfenum/dimacs.hpp"
#include "mcfenum/kbest.hpp"
#include "mcfenum/mcf.hpp"
#include "mcfenum/network.hpp"
#include "mcfenum/oracle.hpp"

namespace mcfenum::cli {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kDefaultEnumerateLimit = 1'000'000;

// Writes flow lines as they arrive and one summary line at the end.
class Reporter {
 public:
  Reporter(std::ostream& out, const Network& net, std::string command)
      : out_(out), net_(net), start_(Clock::now()) {
    summary_["summary"] = true;
    summary_["command"] = std::move(command);
    summary_["n"] = net.node_count();
    summary_["m"] = net.arc_count();
    summary_["status"] = "ok";
    summary_["count"] = 0;
    summary_["optimal_cost"] = nullptr;
  }

  void Emit(const Flow& f) {
    Json line;
    line["cost"] = FlowCost(net_, f);
    line["flow"] = f.values;
    out_ << line.dump() << '\n';
    ++count_;
  }

  Json& summary() { return summary_; }

  int Finish(int code) {
    summary_["count"] = count_;
    summary_["wall_time_ms"] =
        std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
    out_ << summary_.dump() << '\n';
    out_.flush();
    return code;
  }

 private:
  std::ostream& out_;
  const Network& net_;
  Clock::time_point start_;
  std::uint64_t count_ = 0;
  Json summary_;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Parses and validates FILE, then runs `body` with a reporter. Library
// errors end the run with a summary and the matching exit code.
int WithNetwork(const std::string& path, const std::string& command,
                std::ostream& out, std::ostream& err,
                const std::function<int(const Network&, Reporter&)>& body) {
  const Network net = ParseDimacs(ReadFile(path));
  Reporter reporter(out, net, command);
  try {
    ValidateNetwork(net);
    return reporter.Finish(body(net, reporter));
  } catch (const FlowError& e) {
    err << "mcfenum: " << e.what() << '\n';
    reporter.summary()["error"] = std::string(ErrorCodeName(e.code()));
    if (e.code() == ErrorCode::kInfeasible ||
        e.code() == ErrorCode::kUnbalancedSupply) {
      reporter.summary()["status"] = "infeasible";
      return reporter.Finish(kInfeasible);
    }
    if (e.code() == ErrorCode::kBudgetExceeded) {
      reporter.summary()["status"] = "budget_exceeded";
      reporter.summary()["budget_exceeded"] = true;
      return reporter.Finish(kBudgetExceeded);
    }
    reporter.summary()["status"] = "error";
    return reporter.Finish(kUsageError);
  }
}

int Solve(const Network& net, Reporter& r) {
  const Flow f = SolveMinCostFlow(net);
  r.Emit(f);
  r.summary()["optimal_cost"] = FlowCost(net, f);
  return kOk;
}

int Enumerate(const Network& net, Reporter& r, std::uint64_t limit) {
  std::optional<Value> first_cost;
  const EnumerationStats stats = EnumerateAllOptimal(
      net,
      [&](const Flow& f) {
        if (!first_cost) first_cost = FlowCost(net, f);
        r.Emit(f);
      },
      limit);
  r.summary()["optimal_cost"] = *first_cost;
  r.summary()["limit"] = limit;
  r.summary()["limit_reached"] = stats.limit_reached;
  r.summary()["search_calls"] = stats.calls;
  return kOk;
}

int KBest(const Network& net, Reporter& r, std::uint64_t k) {
  std::optional<Value> first_cost;
  const KBestStats stats = FindKBestFlows(net, k, [&](const Flow& f) {
    if (!first_cost) first_cost = FlowCost(net, f);
    r.Emit(f);
  });
  if (first_cost) r.summary()["optimal_cost"] = *first_cost;
  r.summary()["k"] = k;
  r.summary()["second_best_calls"] = stats.second_best_calls;
  return kOk;
}

int Bounds(const Network& net, Reporter& r, bool exact, std::uint64_t limit) {
  const Flow optimal = SolveMinCostFlow(net);
  const TreeSolution sol = ToTreeSolution(net, optimal);
  const CountBounds opt = OptimalCountBounds(net, sol);
  const CountBounds fea = FeasibleCountBounds(net, sol);
  r.summary()["optimal_cost"] = FlowCost(net, optimal);
  Json bounds;
  bounds["count_upper_bound"] = opt.upper;
  bounds["count_lower_bound"] = opt.lower;
  bounds["count_lower_bound_min_reading"] = opt.lower_as_printed;
  bounds["feasible_upper_bound"] = fea.upper;
  bounds["feasible_lower_bound"] = fea.lower;
  bounds["feasible_lower_bound_min_reading"] = fea.lower_as_printed;
  bounds["tree_arcs"] = sol.structure.tree_arcs;
  bounds["zero_cost_nontree_arcs"] = ZeroCostNonTreeSet(net, sol.structure);
  r.summary()["bounds"] = std::move(bounds);
  if (exact) {
    const EnumerationStats stats =
        EnumerateAllOptimal(net, [](const Flow&) {}, limit);
    r.summary()["exact_count"] = stats.count;
    r.summary()["limit_reached"] = stats.limit_reached;
  }
  return kOk;
}

int Oracle(const Network& net, Reporter& r,
           const std::vector<std::string>& mode,
           const EnumerationBudget& budget) {
  std::vector<Flow> flows;
  if (mode[0] == "feasible") {
    flows = EnumerateAllFeasibleBruteforce(net, budget);
  } else if (mode[0] == "optimal") {
    flows = EnumerateAllOptimalBruteforce(net, budget);
  } else {
    std::uint64_t k = 0;
    const std::string& text = mode[1];
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), k);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw UsageError("kbest mode needs a nonnegative integer K");
    }
    flows = KBestBruteforce(net, k, budget);
    r.summary()["k"] = k;
  }
  r.summary()["mode"] = mode[0];
  if (flows.empty()) {
    r.summary()["status"] = "infeasible";
    return kInfeasible;
  }
  Value best = kInfinity;
  for (const Flow& f : flows) {
    best = std::min(best, FlowCost(net, f));
    r.Emit(f);
  }
  r.summary()["optimal_cost"] = best;
  return kOk;
}

int Verify(const Network& net, Reporter& r, const EnumerationBudget& budget) {
  std::vector<Flow> enumerated;
  const EnumerationStats stats = EnumerateAllOptimal(
      net, [&](const Flow& f) { enumerated.push_back(f); }, budget.max_flows);
  if (stats.limit_reached) {
    throw FlowError(ErrorCode::kBudgetExceeded, "enumeration hit max_flows");
  }
  const std::vector<Flow> expected = EnumerateAllOptimalBruteforce(net, budget);
  std::sort(enumerated.begin(), enumerated.end());
  const auto unique_end = std::unique(enumerated.begin(), enumerated.end());
  const std::size_t duplicates =
      static_cast<std::size_t>(enumerated.end() - unique_end);
  enumerated.erase(unique_end, enumerated.end());
  const bool match = duplicates == 0 && enumerated == expected;
  r.summary()["optimal_cost"] =
      expected.empty() ? Json(nullptr) : Json(FlowCost(net, expected.front()));
  r.summary()["enumerated_count"] = stats.count;
  r.summary()["oracle_count"] = expected.size();
  r.summary()["duplicates"] = duplicates;
  r.summary()["match"] = match;
  if (!match) r.summary()["status"] = "mismatch";
  return match ? kOk : kVerifyMismatch;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Optimal and K best integer flows of DIMACS min instances",
               "mcfenum"};
  app.require_subcommand(1);

  std::string file;
  std::uint64_t limit = kDefaultEnumerateLimit;
  std::uint64_t k = 0;
  bool exact = false;
  std::vector<std::string> mode;
  EnumerationBudget budget;

  CLI::App* solve = app.add_subcommand("solve", "Print one optimal flow");
  solve->add_option("file", file, "DIMACS min file")->required();

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "Print every optimal flow once");
  enumerate->add_option("file", file, "DIMACS min file")->required();
  enumerate->add_option("--limit", limit, "Stop after this many flows")
      ->capture_default_str();

  CLI::App* kbest = app.add_subcommand("kbest", "Print the K cheapest flows");
  kbest->add_option("file", file, "DIMACS min file")->required();
  kbest->add_option("k", k, "Number of flows")->required();

  CLI::App* bounds =
      app.add_subcommand("bounds", "Bounds on the number of optimal flows");
  bounds->add_option("file", file, "DIMACS min file")->required();
  bounds->add_flag("--exact", exact, "Also count the optimal flows");
  bounds->add_option("--limit", limit, "Counting limit for --exact")
      ->capture_default_str();

  CLI::App* oracle =
      app.add_subcommand("oracle", "Brute-force reference enumeration");
  oracle->add_option("file", file, "DIMACS min file")->required();
  oracle->add_option("--mode", mode, "feasible | optimal | kbest K")
      ->required()
      ->expected(1, 2);

  CLI::App* verify = app.add_subcommand(
      "verify", "Compare enumeration against the brute-force oracle");
  verify->add_option("file", file, "DIMACS min file")->required();

  for (CLI::App* sub : {oracle, verify}) {
    sub->add_option("--max-states", budget.max_states, "Search node cap")
        ->capture_default_str();
    sub->add_option("--max-flows", budget.max_flows, "Flow cap")
        ->capture_default_str();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*oracle) {
      const bool ok = (mode.size() == 1 &&
                       (mode[0] == "feasible" || mode[0] == "optimal")) ||
                      (mode.size() == 2 && mode[0] == "kbest");
      if (!ok) throw UsageError("--mode must be feasible, optimal or kbest K");
    }
    if (budget.max_states == 0 || budget.max_flows == 0) {
      throw UsageError("budgets must be positive");
    }
    const std::string command = app.get_subcommands().front()->get_name();
    return WithNetwork(file, command, out, err,
                       [&](const Network& net, Reporter& r) -> int {
                         if (*solve) return Solve(net, r);
                         if (*enumerate) return Enumerate(net, r, limit);
                         if (*kbest) return KBest(net, r, k);
                         if (*bounds) return Bounds(net, r, exact, limit);
                         if (*oracle) return Oracle(net, r, mode, budget);
                         return Verify(net, r, budget);
                       });
  } catch (const UsageError& e) {
    err << "mcfenum: " << e.what() << '\n';
    return kUsageError;
  } catch (const FlowError& e) {
    err << "mcfenum: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace mcfenum::cli
