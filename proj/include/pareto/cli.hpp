// Copyright 2026 The pareto-po Authors
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

#ifndef PARETO_CLI_HPP_
#define PARETO_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace pareto {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // not optimal / no improvement
inline constexpr int kExitError = 2;

// `args` excludes the program name. Documents go to `out`, the human
// summary and error lines to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace pareto

#endif  // PARETO_CLI_HPP_
