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

#include "commands.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "zardec/curve.hpp"
#include "zardec/error.hpp"
#include "zardec/flag.hpp"
#include "zardec/golden.hpp"
#include "zardec/green.hpp"
#include "zardec/problem.hpp"
#include "zardec/report.hpp"
#include "zardec/zariski.hpp"

namespace zardec::cli {
namespace {

CommandResult guarded(const std::function<std::string()>& body) {
  CommandResult result;
  try {
    result.out = body();
  } catch (const Error& e) {
    result.exit_code = e.code() == ErrorCode::kParse ? 2 : 1;
    result.err = "E" + std::to_string(static_cast<int>(e.code())) + ": " +
                 std::string(error_name(e.code())) + ": " + e.what() + "\n";
  }
  return result;
}

std::vector<Scalar> parse_grid(const std::string& grid) {
  std::vector<Scalar> values;
  for (const auto& item : split_grid(grid)) values.push_back(parse_scalar(item));
  return values;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kParse, "cannot write '" + path + "'");
  out << contents;
}

DivisorClass omega_of(const Problem& problem, const std::optional<std::string>& omega) {
  return omega ? problem.lookup_class(*omega) : problem.require_lattice().ample();
}

GreenFunction build_green(const Problem& problem, const std::optional<std::string>& omega) {
  const SurfaceLattice& lattice = problem.require_lattice();
  if (problem.sigma.empty()) throw Error(ErrorCode::kParse, "problem has no sigma section");
  return green_from_sigma(lattice, omega_of(problem, omega),
                          make_sigma(lattice, problem.sigma));
}

}  // namespace

std::vector<std::string> split_grid(const std::string& grid) {
  std::vector<std::string> items;
  std::stringstream ss(grid);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") != std::string::npos) items.push_back(item);
  }
  return items;
}

CommandResult cmd_validate(const std::string& input) {
  return guarded([&] {
    const Problem problem = load_problem(input);
    std::string out;
    if (problem.lattice) {
      const ValidationReport report = validate(*problem.lattice);
      out += validation_report(*problem.lattice, report);
      if (!report.ok()) throw Error(ErrorCode::kInvalidLattice, report.issues.front());
    }
    if (problem.flag) {
      const ValidationReport report = validate(problem.flag->s_lattice);
      out += "[flag surface]\n" + validation_report(problem.flag->s_lattice, report);
      if (!report.ok()) throw Error(ErrorCode::kInvalidLattice, report.issues.front());
    }
    return out;
  });
}

CommandResult cmd_decompose(const std::string& input, const std::string& class_name) {
  return guarded([&] {
    const Problem problem = load_problem(input);
    const SurfaceLattice& lattice = problem.require_lattice();
    return decomposition_report(lattice,
                                zariski_decompose(lattice, problem.lookup_class(class_name)));
  });
}

CommandResult cmd_threshold(const std::string& input, const std::string& omega,
                            const std::string& direction, const CsvOption& csv) {
  return guarded([&] {
    const Problem problem = load_problem(input);
    const SurfaceLattice& lattice = problem.require_lattice();
    const DivisorClass w = problem.lookup_class(omega);
    const DivisorClass d = problem.lookup_class(direction);
    const PLFamily family = pl_family(lattice, w, d);
    if (csv.path) write_file(*csv.path, pl_family_csv(lattice, family));
    return threshold_report(family.threshold(), family);
  });
}

CommandResult cmd_green(const std::string& input, const std::optional<std::string>& omega,
                        const CsvOption& csv, const std::string& grid) {
  return guarded([&] {
    const Problem problem = load_problem(input);
    const GreenFunction g = build_green(problem, omega);
    if (csv.path) write_file(*csv.path, green_profile_csv(g, parse_grid(grid)));
    return green_report(g);
  });
}

CommandResult cmd_eval(const std::string& input, const std::optional<std::string>& omega,
                       const std::string& divisor, const std::string& t) {
  return guarded([&] {
    const Problem problem = load_problem(input);
    const GreenFunction g = build_green(problem, omega);
    const Scalar scale = parse_scalar(t);
    return evaluate(g, {divisor, scale}).to_string() + "\n";
  });
}

CommandResult cmd_flag(const std::string& input, const std::string& grid) {
  return guarded([&] {
    const Problem problem = load_problem(input);
    if (!problem.flag) throw Error(ErrorCode::kParse, "problem has no flag section");
    const FlagSection& f = *problem.flag;
    const FlagConfiguration cfg = make_flag(f.s_lattice, f.omega_restr, f.z_restr, f.s_restr);
    return flag_report(flag_green(cfg), parse_grid(grid));
  });
}

CommandResult cmd_curve(const std::string& input, const CsvOption& csv,
                        const std::string& grid) {
  return guarded([&] {
    const Problem problem = load_problem(input);
    if (!problem.curve) throw Error(ErrorCode::kParse, "problem has no curve section");
    const CurveGreenFunction g =
        green_curve(make_curve_sigma(problem.curve->degree, problem.curve->points));
    const std::vector<Scalar> values = parse_grid(grid);
    if (csv.path) write_file(*csv.path, curve_profile_csv(g, values));
    return curve_report(g, values);
  });
}

CommandResult cmd_selftest() {
  CommandResult result;
  std::ostringstream os;
  result.exit_code = golden::run_selftest(os) ? 0 : 1;
  result.out = os.str();
  return result;
}

}  // namespace zardec::cli
