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

#ifndef ZARDEC_FLAG_HPP
#define ZARDEC_FLAG_HPP

#include <vector>

#include "zardec/lattice.hpp"

namespace zardec {

/// A flag Z in S in X of smooth subvarieties, described entirely on S:
/// the restricted lattice N^1(S) (quadric mode, so Nef(S) = Psef(S)) and the
/// classes omega|_S, [Z], [S]|_S. The ambient 3-fold is never represented.
struct FlagConfiguration {
  SurfaceLattice s_lattice;
  DivisorClass omega_restr;
  DivisorClass z_restr;
  DivisorClass s_restr;
  Scalar tau_declared = 1;
};

/// Checks the structural hypotheses: valid quadric-mode lattice, omega|_S
/// ample, and omega|_S - Z not nef. Throws kInvalidLattice or
/// kHypothesisViolated.
FlagConfiguration make_flag(SurfaceLattice s_lattice, DivisorClass omega_restr,
                            DivisorClass z_restr, DivisorClass s_restr);

/// sup{lambda >= 0 : omega|_S - lambda Z nef on S}; must lie in (0, 1).
Scalar lambda_nef_on_s(const FlagConfiguration& cfg);

/// Negative part on the 2-plane spanned by theta_nef and [S]: the point
/// a * theta_nef + b * [S] has N = b * S.
struct FlagDecomposition {
  Scalar theta_nef_coeff;
  Scalar s_coeff;
  /// Coefficient of the prime S in N.
  Scalar negative_s;
};

FlagDecomposition flag_zariski(const FlagConfiguration& cfg, const Scalar& a,
                               const Scalar& b);
/// Points a * theta + c * theta_nef of the nef subcone; N vanishes there.
FlagDecomposition flag_zariski_nef(const FlagConfiguration& cfg, const Scalar& a,
                                   const Scalar& c);

/// phi_v = max{0, l (log|b_Z| + 1), log|b_S| + 1} with l = lambda_nef_on_s.
struct FlagGreenFunction {
  Scalar lambda_s_nef;

  Scalar tau() const { return Scalar(1); }
  bool is_rational_pl() const { return lambda_s_nef.is_rational(); }
};

FlagGreenFunction flag_green(const FlagConfiguration& cfg);

/// Value at a valuation w with w(b_Z) = vanish_z and w(b_S) = vanish_s.
/// Since b_S is contained in b_Z, vanish_s >= vanish_z is required.
Scalar evaluate_flag(const FlagGreenFunction& g, const Scalar& vanish_z,
                     const Scalar& vanish_s);

}  // namespace zardec

#endif  // ZARDEC_FLAG_HPP
