// Copyright 2026 The LPAL Authors
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

#ifndef LPAL_CLI_H_
#define LPAL_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace lpal {

// Exit statuses of the `lpal` command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;     // infeasible concept or "false" decision
inline constexpr int kExitUsage = 2;  // bad arguments, malformed input, wrong method
inline constexpr int kExitTimeout = 3;

// Runs the command line `args` (args[0] is the program name). Instances and
// concepts are read from `in` when no path is given.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace lpal

#endif  // LPAL_CLI_H_
