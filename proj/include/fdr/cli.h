// Copyright 2026 The fdr Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fdr {

// Process exit codes of the `fdr` tool.
enum ExitStatus : int {
  kExitOk = 0,          // success, or the subtyping query holds
  kExitRejected = 1,    // type error or subtyping rejection
  kExitParseError = 2,  // malformed input or usage
  kExitRuntime = 3,     // out of fuel, or stuck
  kExitSuiteFailure = 4,
};

/**
 * Runs one invocation. args excludes the program name. Results go to out,
 * diagnostics to err; the REPL reads from in.
 *
 *   check FILE
 *   eval FILE [--fuel N]
 *   sub T1 T2 [--ctx "X <: T, ..."] [--certify]
 *   oracle-sub T1 T2 [--ctx ...] [--depth D]
 *   diff-sub [--max-size K] [--depth D] [--pairs]
 *   fuzz [--count N] [--seed S] [--depth D] [--fuel F]
 *   repl
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in);

// Runs with the standard streams.
int run(const std::vector<std::string>& args);

}  // namespace fdr
