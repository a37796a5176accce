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

#ifndef ZARDEC_PROBLEM_HPP
#define ZARDEC_PROBLEM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zardec/curve.hpp"
#include "zardec/lattice.hpp"
#include "zardec/zariski.hpp"

namespace zardec {

/// Raw flag section; turned into a FlagConfiguration by make_flag so that
/// hypothesis violations surface as engine errors rather than parse errors.
struct FlagSection {
  SurfaceLattice s_lattice;
  DivisorClass omega_restr;
  DivisorClass z_restr;
  DivisorClass s_restr;
};

struct CurveSection {
  Scalar degree;
  std::vector<CurvePoint> points;
};

/// A parsed problem file. Every section is optional.
struct Problem {
  std::int64_t field = 0;
  std::optional<SurfaceLattice> lattice;
  std::vector<std::pair<std::string, DivisorClass>> classes;
  std::vector<RealDivisorialValuation> sigma;
  std::optional<FlagSection> flag;
  std::optional<CurveSection> curve;

  const SurfaceLattice& require_lattice() const;
  /// Named class, basis label or tracked-curve label, in that order.
  DivisorClass lookup_class(const std::string& name) const;
};

/// Parses the JSON problem format; throws Error(kParse) on malformed input,
/// unknown keys, or scalars outside the declared field.
Problem parse_problem(std::string_view text);
Problem load_problem(const std::string& path);

}  // namespace zardec

#endif  // ZARDEC_PROBLEM_HPP
