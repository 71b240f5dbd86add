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

#include "mcfenum/dimacs.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

namespace mcfenum {
namespace {

struct Token {
  std::string_view text;
  std::size_t column = 0;  // 1-based
};

std::vector<Token> Split(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

[[noreturn]] void Fail(ErrorCode code, std::size_t line, std::size_t column,
                       const std::string& what) {
  throw FlowError(code, "line " + std::to_string(line) + ", column " +
                            std::to_string(column) + ": " + what);
}

Value ParseInt(const Token& t, std::size_t line) {
  Value v = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  if (!t.text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || first == last) {
    Fail(ErrorCode::kSyntaxError, line, t.column,
         "expected an integer, got '" + std::string(t.text) + "'");
  }
  return v;
}

}  // namespace

Network ParseDimacs(std::string_view text) {
  std::optional<NodeId> node_count;
  std::optional<ArcId> declared_arcs;
  std::vector<Value> balances;
  std::vector<Arc> arcs;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::vector<Token> tokens = Split(line);
    if (tokens.empty() || tokens[0].text == "c") continue;
    const Token& kind = tokens[0];
    auto expect = [&](std::size_t count) {
      if (tokens.size() != count) {
        const std::size_t column = tokens.size() > count
                                       ? tokens[count].column
                                       : line.size() + 1;
        Fail(ErrorCode::kSyntaxError, line_no, column,
             "'" + std::string(kind.text) + "' line needs " +
                 std::to_string(count - 1) + " fields");
      }
    };
    auto node_id = [&](const Token& t) -> NodeId {
      const Value id = ParseInt(t, line_no);
      if (id < 1 || id > *node_count) {
        Fail(ErrorCode::kNodeIdOutOfRange, line_no, t.column,
             "node id " + std::to_string(id) + " not in 1.." +
                 std::to_string(*node_count));
      }
      return static_cast<NodeId>(id - 1);
    };
    if (kind.text == "p") {
      if (node_count) {
        Fail(ErrorCode::kDuplicateProblemLine, line_no, kind.column,
             "second problem line");
      }
      expect(4);
      if (tokens[1].text != "min") {
        Fail(ErrorCode::kSyntaxError, line_no, tokens[1].column,
             "expected 'min'");
      }
      const Value n = ParseInt(tokens[2], line_no);
      const Value m = ParseInt(tokens[3], line_no);
      if (n < 1 || n > INT32_MAX) {
        Fail(ErrorCode::kSyntaxError, line_no, tokens[2].column,
             "bad node count");
      }
      if (m < 0 || m > INT32_MAX) {
        Fail(ErrorCode::kSyntaxError, line_no, tokens[3].column,
             "bad arc count");
      }
      node_count = static_cast<NodeId>(n);
      declared_arcs = static_cast<ArcId>(m);
      balances.assign(n, 0);
      continue;
    }
    if (kind.text != "n" && kind.text != "a") {
      Fail(ErrorCode::kSyntaxError, line_no, kind.column,
           "unknown line type '" + std::string(kind.text) + "'");
    }
    if (!node_count) {
      Fail(ErrorCode::kSyntaxError, line_no, kind.column,
           "'" + std::string(kind.text) + "' line before problem line");
    }
    if (kind.text == "n") {
      expect(3);
      const NodeId v = node_id(tokens[1]);
      balances[v] = ParseInt(tokens[2], line_no);
    } else {
      expect(6);
      Arc arc;
      arc.src = node_id(tokens[1]);
      arc.dst = node_id(tokens[2]);
      arc.lower = ParseInt(tokens[3], line_no);
      arc.upper = ParseInt(tokens[4], line_no);
      arc.cost = ParseInt(tokens[5], line_no);
      if (arc.src == arc.dst) {
        Fail(ErrorCode::kSelfLoop, line_no, tokens[2].column, "self-loop");
      }
      arcs.push_back(arc);
    }
  }
  if (!node_count) {
    Fail(ErrorCode::kSyntaxError, line_no, 1, "missing problem line");
  }
  if (static_cast<ArcId>(arcs.size()) != *declared_arcs) {
    throw FlowError(ErrorCode::kArcCountMismatch,
                    "problem line declares " + std::to_string(*declared_arcs) +
                        " arcs, found " + std::to_string(arcs.size()));
  }
  return Network(*node_count, std::move(arcs), std::move(balances));
}

std::string WriteDimacs(const Network& net) {
  std::ostringstream out;
  out << "p min " << net.node_count() << ' ' << net.arc_count() << '\n';
  for (NodeId v = 0; v < net.node_count(); ++v) {
    if (net.balance(v) != 0) out << "n " << v + 1 << ' ' << net.balance(v) << '\n';
  }
  for (const Arc& arc : net.arcs()) {
    out << "a " << arc.src + 1 << ' ' << arc.dst + 1 << ' ' << arc.lower << ' '
        << arc.upper << ' ' << arc.cost << '\n';
  }
  return out.str();
}

}  // namespace mcfenum
