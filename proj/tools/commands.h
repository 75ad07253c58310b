// Copyright 2026 The Privbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Subcommands of the privbound tool, callable with explicit streams.

#ifndef PRIVBOUND_TOOLS_COMMANDS_H_
#define PRIVBOUND_TOOLS_COMMANDS_H_

#include <ostream>
#include <string>
#include <vector>

namespace privbound::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailure = 1,
  kParseError = 2,
  kDomainError = 3,
};

// Runs `args` (without the program name). `env_seed` is the value of
// PRIVBOUND_SEED, or nullptr when unset.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const char* env_seed = nullptr);

// Fixed six-decimal rendering; values that round to zero print unsigned.
std::string FormatNumber(double value);

}  // namespace privbound::cli

#endif  // PRIVBOUND_TOOLS_COMMANDS_H_
