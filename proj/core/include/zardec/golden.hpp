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

#ifndef ZARDEC_GOLDEN_HPP
#define ZARDEC_GOLDEN_HPP

#include <iosfwd>

#include "zardec/curve.hpp"
#include "zardec/flag.hpp"
#include "zardec/lattice.hpp"

// Reference instances with hand-checked answers.
namespace zardec::golden {

/// Plane blown up at a point: basis (H, E), gram diag(1, -1), tracked curves
/// E and C = H - E, which also generate the psef cone; ample 2H - E.
SurfaceLattice blowup();

/// Quadric-mode lattice with gram [[4, 6], [6, 2]] on basis (L, E),
/// polarization and ample class L.
SurfaceLattice abelian();

/// Flag whose surface lattice is the abelian one (basis h, Z), with
/// omega|_S = h and Z = second basis vector.
FlagConfiguration cutkosky_flag();

/// Degree 1 with sigma = {ord_p}.
CurveSigma curve_degree_one();
/// Degree 3 with sigma = {ord_p, (1/2) ord_q}.
CurveSigma curve_degree_three();

/// Recomputes every golden value, printing one PASS/FAIL line per check.
/// Returns true when all pass.
bool run_selftest(std::ostream& os);

}  // namespace zardec::golden

#endif  // ZARDEC_GOLDEN_HPP
