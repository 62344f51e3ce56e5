// Copyright 2026 The xlang Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef XLANG_TOOLS_COMMANDS_HPP
#define XLANG_TOOLS_COMMANDS_HPP

#include <ostream>
#include <string>
#include <vector>

namespace xlang::cli {

enum ExitCode { kOk = 0, kFailed = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name). Reports go to
/// `out` unless `--output` names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(const std::string& data);

}  // namespace xlang::cli

#endif  // XLANG_TOOLS_COMMANDS_HPP
