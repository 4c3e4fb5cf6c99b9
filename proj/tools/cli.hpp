// Copyright 2026 The tropcx Authors.
//
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

#ifndef TROPCX_TOOLS_CLI_HPP_
#define TROPCX_TOOLS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace tropcx::tools {

// Process exit codes. These values are a stable contract.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // output write failure or a geometric cross-check disagreement
  kExitParseError = 2,
  kExitSizeCap = 3,
  kExitNotType = 4,
  kExitUnsupportedDimension = 5,
};

// Runs the command line `tropcx <args...>` (args excludes the program name),
// writing results to out and diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropcx::tools

#endif  // TROPCX_TOOLS_CLI_HPP_
