// Copyright 2026 The zardec Authors
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

#ifndef ZARDEC_TOOLS_COMMANDS_HPP
#define ZARDEC_TOOLS_COMMANDS_HPP

#include <optional>
#include <string>
#include <vector>

namespace zardec::cli {

/// Output of one command. Exit status 0 on success, 1 for engine errors,
/// 2 for parse errors; errors are written as "E<code>: <name>: <message>".
struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

struct CsvOption {
  std::optional<std::string> path;
};

CommandResult cmd_validate(const std::string& input);
CommandResult cmd_decompose(const std::string& input, const std::string& class_name);
CommandResult cmd_threshold(const std::string& input, const std::string& omega,
                            const std::string& direction, const CsvOption& csv);
CommandResult cmd_green(const std::string& input, const std::optional<std::string>& omega,
                        const CsvOption& csv, const std::string& grid);
CommandResult cmd_eval(const std::string& input, const std::optional<std::string>& omega,
                       const std::string& divisor, const std::string& t);
CommandResult cmd_flag(const std::string& input, const std::string& grid);
CommandResult cmd_curve(const std::string& input, const CsvOption& csv,
                        const std::string& grid);
CommandResult cmd_selftest();

/// Comma-separated scalars, e.g. "0, 1/4, 1/2".
std::vector<std::string> split_grid(const std::string& grid);

}  // namespace zardec::cli

#endif  // ZARDEC_TOOLS_COMMANDS_HPP
