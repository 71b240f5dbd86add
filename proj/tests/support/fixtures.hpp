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

// Small hand-checked networks shared by the unit and acceptance tests.
// Nodes a, b, c, d, e are 0..4.

#ifndef MCFENUM_TESTS_FIXTURES_HPP_
#define MCFENUM_TESTS_FIXTURES_HPP_

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mcfenum/network.hpp"

namespace mcfenum::testing {

enum : NodeId { kA = 0, kB = 1, kC = 2, kD = 3, kE = 4 };

inline Arc MakeArc(NodeId src, NodeId dst, Value lower, Value upper, Value cost) {
  return Arc{src, dst, lower, upper, cost};
}

// Arcs ab, ac, ad, bd, cd, ce, de.
inline Network Fig3Network() {
  return Network(5,
                 {MakeArc(kA, kB, 0, 1, 8), MakeArc(kA, kC, 0, 1, 3),
                  MakeArc(kA, kD, 0, 4, 4), MakeArc(kB, kD, 0, 5, 5),
                  MakeArc(kC, kD, 0, 1, 1), MakeArc(kC, kE, 0, 4, 2),
                  MakeArc(kD, kE, 0, 3, 1)},
                 {3, 5, 2, -6, -4});
}
inline Flow Fig3Flow() { return Flow({0, 0, 3, 5, 0, 2, 2}); }
inline Flow Fig3Augmented() { return Flow({0, 0, 3, 5, 1, 1, 3}); }

// Fig3 without arc ab; its residual graph under Fig1Flow() is the graph
// used for the DFS examples. Arcs ac, ad, bd, cd, ce, de.
inline Network Fig1Network() {
  return Network(5,
                 {MakeArc(kA, kC, 0, 1, 3), MakeArc(kA, kD, 0, 4, 4),
                  MakeArc(kB, kD, 0, 5, 5), MakeArc(kC, kD, 0, 1, 1),
                  MakeArc(kC, kE, 0, 4, 2), MakeArc(kD, kE, 0, 3, 1)},
                 {3, 5, 2, -6, -4});
}
inline Flow Fig1Flow() { return Flow({0, 3, 5, 0, 2, 2}); }

// Arcs ab, ac, ad, bd, cd, ce, de; costs are the optimal reduced costs.
inline Network Fig7aNetwork() {
  return Network(5,
                 {MakeArc(kA, kB, 0, 1, 20), MakeArc(kA, kC, 0, 1, 50),
                  MakeArc(kA, kD, 0, 4, 0), MakeArc(kB, kD, 0, 5, 0),
                  MakeArc(kC, kD, 0, 10, 0), MakeArc(kC, kE, 0, 14, 0),
                  MakeArc(kD, kE, 0, 14, 0)},
                 {0, 5, 12, -3, -14});
}
inline Flow Fig7aFlow() { return Flow({0, 0, 0, 5, 0, 12, 2}); }

inline Network Fig7bNetwork() {
  return Network(5,
                 {MakeArc(kA, kB, 0, 1, 20), MakeArc(kA, kC, 0, 1, 50),
                  MakeArc(kA, kD, 0, 4, 0), MakeArc(kB, kD, 0, 5, 0),
                  MakeArc(kC, kD, 0, 10, 0), MakeArc(kC, kE, 0, 2, 0),
                  MakeArc(kD, kE, 0, 2, 0)},
                 {0, 5, 2, -3, -4});
}
inline Flow Fig7bFlow() { return Flow({0, 0, 0, 5, 0, 2, 2}); }

// s -> m (u1, c0), m -> t (u1, c1), s -> t (u1, c2); one unit from s to t.
inline Network Example3Network() {
  return Network(3, {MakeArc(0, 1, 0, 1, 0), MakeArc(1, 2, 0, 1, 1),
                     MakeArc(0, 2, 0, 1, 2)},
                 {1, 0, -1});
}

inline std::string DataPath(const std::string& name) {
  return std::string(MCFENUM_TEST_DATA_DIR) + "/" + name;
}

inline std::string ReadData(const std::string& name) {
  std::ifstream in(DataPath(name));
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

}  // namespace mcfenum::testing

#endif  // MCFENUM_TESTS_FIXTURES_HPP_
