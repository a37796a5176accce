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

#ifndef ZARDEC_ZARISKI_HPP
#define ZARDEC_ZARISKI_HPP

#include <string>
#include <vector>

#include "zardec/lattice.hpp"

namespace zardec {

struct ZariskiCertificate {
  bool gram_negdef = false;
  bool orthogonality = false;
  bool positive_nef = false;
  bool reassembly = false;
  bool effective = false;

  bool holds() const {
    return gram_negdef && orthogonality && positive_nef && reassembly && effective;
  }
};

/// theta = P + N with P nef, N an effective combination of tracked curves
/// with negative definite Gram matrix, and P.C = 0 on Supp N.
struct ZariskiDecomposition {
  DivisorClass input;
  DivisorClass positive;
  /// Formal sum over tracked-curve labels, in declaration order.
  Divisor negative;
  ZariskiCertificate certificate;

  std::vector<std::string> support() const;
};

/// Fujita-Zariski iteration over the tracked curves. In quadric mode the
/// negative part is always zero.
ZariskiDecomposition zariski_decompose(const SurfaceLattice& lattice,
                                       const DivisorClass& theta);

/// Recomputes every certificate condition from the decomposition's data
/// alone, without trusting the solver.
ZariskiCertificate verify_certificate(const SurfaceLattice& lattice,
                                      const ZariskiDecomposition& decomposition);

/// sup{lambda >= 0 : omega - lambda D is pseudoeffective}.
Scalar threshold_psef(const SurfaceLattice& lattice, const DivisorClass& omega,
                      const DivisorClass& direction);

/// One affine piece lambda -> value_at_start + (lambda - start) * slope.
struct PLSegment {
  Scalar start;
  Scalar end;
  Divisor value_at_start;
  Divisor slope;
  std::vector<std::string> support;

  Divisor value_at(const Scalar& lambda) const;
};

/// lambda -> N(omega - lambda D) on [0, lambda_psef]; identically zero for
/// lambda <= 0.
struct PLFamily {
  std::vector<Scalar> breakpoints;
  std::vector<PLSegment> segments;

  const Scalar& threshold() const { return breakpoints.back(); }
  /// Throws kNotPseudoeffective beyond the threshold.
  Divisor value_at(const Scalar& lambda) const;
};

/// Exact chamber walk along the ray omega - lambda D.
PLFamily pl_family(const SurfaceLattice& lattice, const DivisorClass& omega,
                   const DivisorClass& direction);

/// v = scale * ord_divisor, scale > 0.
struct RealDivisorialValuation {
  std::string divisor;
  Scalar scale;

  RealDivisorialValuation(std::string divisor_label, Scalar t);
};

/// v(theta) = t * (coefficient of E in N(theta)) for v = t * ord_E.
Scalar minimal_vanishing_order(const SurfaceLattice& lattice,
                               const RealDivisorialValuation& v,
                               const DivisorClass& theta);

/// Divisorial part of the diminished base locus: Supp N(theta).
std::vector<std::string> negative_support(const SurfaceLattice& lattice,
                                          const DivisorClass& theta);

}  // namespace zardec

#endif  // ZARDEC_ZARISKI_HPP
