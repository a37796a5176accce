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

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace zardec::cli;
  CLI::App app{"Exact Zariski decompositions, psef thresholds and Green's functions"};
  app.require_subcommand(1);

  std::string input;
  std::string class_name;
  std::string omega_name;
  std::string direction;
  std::string divisor;
  std::string scale;
  std::string csv_path;
  std::string grid = "0, 1/4, 1/2, 3/4, 1";

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("-i,--input", input, "Problem file (JSON)")->required();
  };

  auto* validate = app.add_subcommand("validate", "Check lattice invariants");
  add_input(validate);

  auto* decompose = app.add_subcommand("decompose", "Zariski decomposition of a class");
  add_input(decompose);
  decompose->add_option("-c,--class", class_name, "Class name")->required();

  auto* threshold = app.add_subcommand("threshold", "Psef threshold and negative-part family");
  add_input(threshold);
  threshold->add_option("--omega", omega_name, "Ample class name")->required();
  threshold->add_option("--direction", direction, "Direction class name")->required();
  threshold->add_option("--csv", csv_path, "Write the family as CSV");

  auto* green = app.add_subcommand("green", "Green's function of the sigma section");
  add_input(green);
  green->add_option("--omega", omega_name, "Ample class name (default: lattice ample)");
  green->add_option("--csv", csv_path, "Write the evaluation profile as CSV");
  green->add_option("--grid", grid, "Comma-separated scales for the profile");

  auto* eval = app.add_subcommand("eval", "Evaluate the Green's function at t*ord_E");
  add_input(eval);
  eval->add_option("--omega", omega_name, "Ample class name (default: lattice ample)");
  eval->add_option("-d,--divisor", divisor, "Prime divisor label")->required();
  eval->add_option("-t,--t", scale, "Scale t > 0")->required();

  auto* flag = app.add_subcommand("flag", "Flag Green's function");
  add_input(flag);
  flag->add_option("--grid", grid, "Vanishing orders for the evaluation table");

  auto* curve = app.add_subcommand("curve", "Green's function on a curve");
  add_input(curve);
  curve->add_option("--csv", csv_path, "Write the evaluation profile as CSV");
  curve->add_option("--grid", grid, "Comma-separated scales");

  auto* selftest = app.add_subcommand("selftest", "Run the built-in golden instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  auto optional_of = [](const std::string& s) {
    return s.empty() ? std::nullopt : std::optional<std::string>(s);
  };
  const CsvOption csv{optional_of(csv_path)};

  CommandResult result;
  if (validate->parsed()) {
    result = cmd_validate(input);
  } else if (decompose->parsed()) {
    result = cmd_decompose(input, class_name);
  } else if (threshold->parsed()) {
    result = cmd_threshold(input, omega_name, direction, csv);
  } else if (green->parsed()) {
    result = cmd_green(input, optional_of(omega_name), csv, grid);
  } else if (eval->parsed()) {
    result = cmd_eval(input, optional_of(omega_name), divisor, scale);
  } else if (flag->parsed()) {
    result = cmd_flag(input, grid);
  } else if (curve->parsed()) {
    result = cmd_curve(input, csv, grid);
  } else if (selftest->parsed()) {
    result = cmd_selftest();
  }
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
