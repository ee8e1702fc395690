// Copyright 2026 The Wildla Authors
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

#ifndef WILDLA_CLI_HPP_
#define WILDLA_CLI_HPP_

#include <ostream>

namespace wildla::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFail = 1,
  kExitUsage = 2,
  kExitBudget = 3,
};

// Runs the wildla command line: encode, verify, eval, cf, ip, formula.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace wildla::cli

#endif  // WILDLA_CLI_HPP_
