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

#ifndef ZARDEC_GREEN_HPP
#define ZARDEC_GREEN_HPP

#include <string>
#include <vector>

#include "zardec/lattice.hpp"
#include "zardec/zariski.hpp"

namespace zardec {

/// A finite set of real divisorial valuations t_a * ord_{E_a} on distinct
/// primes, together with D = sum_a t_a^{-1} E_a (so that v_a(D) = 1).
struct SigmaSet {
  std::vector<RealDivisorialValuation> valuations;
  Divisor divisor;
};

/// Resolves labels against the lattice and builds D. Throws kInvalidSigma for
/// an empty set or repeated primes, kUnknownDivisor for unresolvable labels.
SigmaSet make_sigma(const SurfaceLattice& lattice,
                    std::vector<RealDivisorialValuation> valuations);

/// phi = max_i { psi_{B_i} + lambda_i } with antieffective B_i, where
/// psi_B(t * ord_E) = t * coeff_E(B).
struct GreenFunction {
  SurfaceLattice lattice;
  DivisorClass omega;
  SigmaSet sigma;
  PLFamily family;
  std::vector<Scalar> breakpoints;
  std::vector<Divisor> divisors;
};

GreenFunction green_from_sigma(const SurfaceLattice& lattice, const DivisorClass& omega,
                               const SigmaSet& sigma);

Scalar evaluate(const GreenFunction& g, const RealDivisorialValuation& v);

/// B_lambda = -(N(omega - lambda D) + lambda D); zero for lambda <= 0.
Divisor slice(const GreenFunction& g, const Scalar& lambda);

inline const Scalar& tau(const GreenFunction& g) { return g.breakpoints.back(); }

/// Whether phi is Q-PL, decided by rationality of tau. Throws
/// kClassificationUnavailable when omega or a scale is irrational.
bool is_rational_pl(const GreenFunction& g);

/// Supp N(omega - tau D) followed by the primes of Sigma, without repeats.
std::vector<std::string> center_divisorial(const GreenFunction& g);

}  // namespace zardec

#endif  // ZARDEC_GREEN_HPP
