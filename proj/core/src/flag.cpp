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

#include "zardec/flag.hpp"

#include "zardec/zariski.hpp"

namespace zardec {

FlagConfiguration make_flag(SurfaceLattice s_lattice, DivisorClass omega_restr,
                            DivisorClass z_restr, DivisorClass s_restr) {
  if (s_lattice.curves_mode()) {
    throw Error(ErrorCode::kInvalidLattice, "flag surface lattice must be in quadric mode");
  }
  const ValidationReport report = validate(s_lattice);
  if (!report.ok()) {
    throw Error(ErrorCode::kInvalidLattice, "flag surface lattice: " + report.issues.front());
  }
  s_lattice.check_dimension(omega_restr);
  s_lattice.check_dimension(z_restr);
  s_lattice.check_dimension(s_restr);
  if (!s_lattice.is_ample(omega_restr)) {
    throw Error(ErrorCode::kHypothesisViolated, "omega|_S is not ample on S");
  }
  if (s_lattice.is_nef(omega_restr - z_restr)) {
    throw Error(ErrorCode::kHypothesisViolated, "omega|_S - Z is nef on S");
  }
  return FlagConfiguration{std::move(s_lattice), std::move(omega_restr),
                           std::move(z_restr), std::move(s_restr), Scalar(1)};
}

Scalar lambda_nef_on_s(const FlagConfiguration& cfg) {
  // Nef(S) = Psef(S), so the nef threshold is the psef threshold.
  const Scalar lambda = threshold_psef(cfg.s_lattice, cfg.omega_restr, cfg.z_restr);
  if (lambda >= Scalar(1)) {
    throw Error(ErrorCode::kHypothesisViolated,
                "nef threshold " + lambda.to_string() + " on S is not below 1");
  }
  return lambda;
}

FlagDecomposition flag_zariski(const FlagConfiguration& /*cfg*/, const Scalar& a,
                               const Scalar& b) {
  if (a.sign() < 0 || b.sign() < 0) {
    throw Error(ErrorCode::kNegativeCoefficients, "cone coordinates must be nonnegative");
  }
  return {a, b, b};
}

FlagDecomposition flag_zariski_nef(const FlagConfiguration& /*cfg*/, const Scalar& a,
                                   const Scalar& c) {
  if (a.sign() < 0 || c.sign() < 0) {
    throw Error(ErrorCode::kNegativeCoefficients, "cone coordinates must be nonnegative");
  }
  return {c, Scalar(), Scalar()};
}

FlagGreenFunction flag_green(const FlagConfiguration& cfg) {
  return {lambda_nef_on_s(cfg)};
}

Scalar evaluate_flag(const FlagGreenFunction& g, const Scalar& vanish_z,
                     const Scalar& vanish_s) {
  if (vanish_z.sign() < 0 || vanish_s.sign() < 0) {
    throw Error(ErrorCode::kNegativeCoefficients, "vanishing orders must be nonnegative");
  }
  if (vanish_z > vanish_s) {
    throw Error(ErrorCode::kInconsistentVanishing,
                "w(b_S) must be at least w(b_Z) because b_S is contained in b_Z");
  }
  const Scalar one(1);
  return max(Scalar(), max(g.lambda_s_nef * (one - vanish_z), one - vanish_s));
}

}  // namespace zardec
