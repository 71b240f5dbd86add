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

#ifndef MCFENUM_TOOLS_CLI_HPP_
#define MCFENUM_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace mcfenum::cli {

enum ExitCode : int {
  kOk = 0,
  kInfeasible = 1,
  kUsageError = 2,
  kBudgetExceeded = 3,
  kVerifyMismatch = 4,
};

// Runs one subcommand. `args` excludes the program name. Flows and the
// summary go to `out` as JSON Lines, diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace mcfenum::cli

#endif  // MCFENUM_TOOLS_CLI_HPP_
