// Copyright 2026 The opeq Authors. All rights reserved.
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

#ifndef OPEQ_TOOLS_CLI_HPP_
#define OPEQ_TOOLS_CLI_HPP_

#include <ostream>
#include <span>
#include <string>

namespace opeq::cli {

// Exit codes: 0 success, 1 domain error, 2 usage error. Reports go to `out`,
// diagnostics to `err`. `args` excludes the program name.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace opeq::cli

#endif  // OPEQ_TOOLS_CLI_HPP_
