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

#include "zardec/green.hpp"

#include <algorithm>

namespace zardec {

SigmaSet make_sigma(const SurfaceLattice& lattice,
                    std::vector<RealDivisorialValuation> valuations) {
  if (valuations.empty()) throw Error(ErrorCode::kInvalidSigma, "sigma set is empty");
  SigmaSet sigma;
  std::vector<std::string> seen;
  for (auto& v : valuations) {
    const std::string prime = lattice.prime_label(v.divisor);
    if (std::find(seen.begin(), seen.end(), prime) != seen.end()) {
      throw Error(ErrorCode::kInvalidSigma, "prime '" + prime + "' appears twice in sigma");
    }
    seen.push_back(prime);
    sigma.divisor.add(prime, v.scale.inverse());
    v.divisor = prime;
  }
  sigma.valuations = std::move(valuations);
  for (const auto& v : sigma.valuations) {
    if (!(v.scale * sigma.divisor.coeff(v.divisor) == Scalar(1))) {
      throw Error(ErrorCode::kInvalidSigma, "Rees normalization v(D) = 1 failed");
    }
  }
  return sigma;
}

GreenFunction green_from_sigma(const SurfaceLattice& lattice, const DivisorClass& omega,
                               const SigmaSet& sigma) {
  const DivisorClass d = lattice.class_of(sigma.divisor);
  PLFamily family = pl_family(lattice, omega, d);
  GreenFunction g{lattice, omega, sigma, std::move(family), {}, {}};
  g.breakpoints = g.family.breakpoints;
  for (const Scalar& lambda : g.breakpoints) g.divisors.push_back(slice(g, lambda));
  return g;
}

Divisor slice(const GreenFunction& g, const Scalar& lambda) {
  if (lambda.sign() <= 0) return {};
  Divisor b = g.family.value_at(lambda) + lambda * g.sigma.divisor;
  b *= Scalar(-1);
  return b;
}

Scalar evaluate(const GreenFunction& g, const RealDivisorialValuation& v) {
  const std::string prime = g.lattice.prime_label(v.divisor);
  Scalar best;
  for (std::size_t i = 0; i < g.breakpoints.size(); ++i) {
    const Scalar value = v.scale * g.divisors[i].coeff(prime) + g.breakpoints[i];
    if (i == 0 || best < value) best = value;
  }
  return best;
}

bool is_rational_pl(const GreenFunction& g) {
  if (!g.omega.is_rational()) {
    throw Error(ErrorCode::kClassificationUnavailable,
                "omega is irrational; only the real PL statement applies");
  }
  for (const auto& v : g.sigma.valuations) {
    if (!v.scale.is_rational()) {
      throw Error(ErrorCode::kClassificationUnavailable,
                  "valuation scale " + v.scale.to_string() + " is irrational");
    }
  }
  return tau(g).is_rational();
}

std::vector<std::string> center_divisorial(const GreenFunction& g) {
  std::vector<std::string> out;
  const Divisor at_tau = g.family.value_at(tau(g));
  for (const auto& t : at_tau.terms()) out.push_back(t.prime);
  for (const auto& v : g.sigma.valuations) {
    if (std::find(out.begin(), out.end(), v.divisor) == out.end()) {
      out.push_back(v.divisor);
    }
  }
  return out;
}

}  // namespace zardec
