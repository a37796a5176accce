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

#include "zardec/zariski.hpp"

#include <algorithm>
#include <optional>

namespace zardec {

std::vector<std::string> ZariskiDecomposition::support() const {
  std::vector<std::string> out;
  for (const auto& t : negative.terms()) out.push_back(t.prime);
  return out;
}

ZariskiCertificate verify_certificate(const SurfaceLattice& lattice,
                                      const ZariskiDecomposition& dec) {
  ZariskiCertificate cert;
  std::vector<std::size_t> support;
  cert.effective = true;
  for (const auto& t : dec.negative.terms()) {
    const auto idx = lattice.find_curve(t.prime);
    if (!idx || t.coeff.sign() <= 0) {
      cert.effective = false;
      continue;
    }
    support.push_back(*idx);
  }
  cert.reassembly = dec.input == dec.positive + lattice.class_of(dec.negative);
  cert.orthogonality = std::all_of(support.begin(), support.end(), [&](std::size_t i) {
    return lattice.intersect(dec.positive, lattice.curves()[i].cls).is_zero();
  });
  cert.gram_negdef = is_negative_definite(lattice.curve_gram(support));
  cert.positive_nef = lattice.is_nef(dec.positive);
  return cert;
}

namespace {

Divisor curve_combination(const SurfaceLattice& lattice,
                          const std::vector<std::size_t>& curves,
                          const Vector& coeffs) {
  Divisor d;
  for (std::size_t k = 0; k < curves.size(); ++k) {
    d.add(lattice.curves()[curves[k]].label, coeffs[k]);
  }
  return d;
}

}  // namespace

ZariskiDecomposition zariski_decompose(const SurfaceLattice& lattice,
                                       const DivisorClass& theta) {
  lattice.check_dimension(theta);
  if (!lattice.is_psef(theta)) {
    throw Error(ErrorCode::kNotPseudoeffective, "class is not pseudoeffective");
  }
  ZariskiDecomposition dec;
  dec.input = theta;
  dec.positive = theta;

  if (lattice.curves_mode()) {
    const auto& curves = lattice.curves();
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < curves.size(); ++i) {
      if (lattice.intersect(theta, curves[i].cls).sign() < 0) support.push_back(i);
    }
    Vector coeffs;
    for (std::size_t round = 0;; ++round) {
      if (round > curves.size()) {
        throw Error(ErrorCode::kNonTermination,
                    "support kept growing past the number of tracked curves");
      }
      coeffs.assign(support.size(), Scalar());
      if (!support.empty()) {
        const Matrix g = lattice.curve_gram(support);
        if (!is_negative_definite(g)) {
          throw Error(ErrorCode::kGramNotNegativeDefinite,
                      "curves violating the positive part do not span a negative "
                      "definite configuration; the curve declaration is inconsistent");
        }
        Vector rhs(support.size());
        for (std::size_t k = 0; k < support.size(); ++k) {
          rhs[k] = lattice.intersect(theta, curves[support[k]].cls);
        }
        coeffs = *solve(g, rhs);
      }
      dec.positive = theta;
      for (std::size_t k = 0; k < support.size(); ++k) {
        dec.positive -= coeffs[k] * curves[support[k]].cls;
      }
      std::vector<std::size_t> grown = support;
      for (std::size_t i = 0; i < curves.size(); ++i) {
        if (std::find(support.begin(), support.end(), i) != support.end()) continue;
        if (lattice.intersect(dec.positive, curves[i].cls).sign() < 0) grown.push_back(i);
      }
      if (grown.size() == support.size()) break;
      std::sort(grown.begin(), grown.end());
      support = std::move(grown);
    }
    if (std::any_of(coeffs.begin(), coeffs.end(),
                    [](const Scalar& c) { return c.sign() < 0; })) {
      throw Error(ErrorCode::kNefCertificateFailed,
                  "negative part acquired a negative coefficient");
    }
    dec.negative = curve_combination(lattice, support, coeffs);
  }

  dec.certificate = verify_certificate(lattice, dec);
  if (!dec.certificate.positive_nef) {
    throw Error(ErrorCode::kNefCertificateFailed,
                "positive part is negative on a psef generator that is not a tracked "
                "curve; the curve list is incomplete");
  }
  return dec;
}

Scalar threshold_psef(const SurfaceLattice& lattice, const DivisorClass& omega,
                      const DivisorClass& direction) {
  lattice.check_dimension(omega);
  lattice.check_dimension(direction);
  if (!lattice.is_ample(omega)) throw Error(ErrorCode::kNotAmple, "omega is not ample");
  if (direction.is_zero()) throw Error(ErrorCode::kZeroDirection, "direction is zero");
  if (!lattice.is_psef(direction)) {
    throw Error(ErrorCode::kNotEffective, "direction is not pseudoeffective");
  }
  const std::size_t r = lattice.rank();

  if (lattice.curves_mode()) {
    // maximize lambda s.t. sum mu_j g_j + lambda D = omega, mu, lambda >= 0.
    const auto& gens = lattice.cone().psef_generators;
    Matrix a(r, gens.size() + 1);
    Vector cost(gens.size() + 1);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < gens.size(); ++j) a(i, j) = gens[j].coeffs[i];
      a(i, gens.size()) = direction.coeffs[i];
    }
    cost[gens.size()] = 1;
    const LpResult lp = maximize(a, omega.coeffs, cost);
    if (lp.status == LpStatus::kUnbounded) {
      throw Error(ErrorCode::kUnboundedRay, "ray never leaves the pseudoeffective cone");
    }
    if (lp.status == LpStatus::kInfeasible) {
      throw Error(ErrorCode::kNotPseudoeffective, "omega is not pseudoeffective");
    }
    return lp.value;
  }

  // Quadric cone: (omega - l D)^2 >= 0 and (omega - l D).h >= 0.
  const DivisorClass& h = lattice.cone().polarization;
  const Scalar q0 = lattice.self_intersection(omega);
  const Scalar q1 = Scalar(-2) * lattice.intersect(omega, direction);
  const Scalar q2 = lattice.self_intersection(direction);
  if (!q0.is_rational() || !q1.is_rational() || !q2.is_rational()) {
    throw Error(ErrorCode::kNestedExtension,
                "boundary quadratic has irrational coefficients");
  }
  std::vector<Scalar> candidates;
  if (!(q0.is_zero() && q1.is_zero() && q2.is_zero())) {
    for (const Scalar& root : solve_quadratic(q2.rational_part(), q1.rational_part(),
                                              q0.rational_part(), lattice.field())) {
      if (root.sign() > 0) candidates.push_back(root);
    }
  }
  const Scalar dh = lattice.intersect(direction, h);
  if (!dh.is_zero()) {
    const Scalar root = lattice.intersect(omega, h) / dh;
    if (root.sign() > 0) candidates.push_back(root);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    const Scalar probe = k + 1 < candidates.size()
                             ? (candidates[k] + candidates[k + 1]) / Scalar(2)
                             : candidates[k] + Scalar(1);
    if (!lattice.is_psef(omega - probe * direction)) return candidates[k];
  }
  throw Error(ErrorCode::kUnboundedRay, "ray never leaves the pseudoeffective cone");
}

Divisor PLSegment::value_at(const Scalar& lambda) const {
  return value_at_start + (lambda - start) * slope;
}

Divisor PLFamily::value_at(const Scalar& lambda) const {
  if (lambda.sign() <= 0) return {};
  if (lambda > threshold()) {
    throw Error(ErrorCode::kNotPseudoeffective, "lambda beyond the psef threshold");
  }
  for (const auto& seg : segments) {
    if (lambda <= seg.end) return seg.value_at(lambda);
  }
  return segments.back().value_at(lambda);
}

namespace {

// lambda -> offset + lambda * rate.
struct Affine {
  Scalar offset;
  Scalar rate;
  Scalar at(const Scalar& lambda) const { return offset + lambda * rate; }
};

// Negative part on a fixed support, as an affine function of lambda.
class Chamber {
 public:
  Chamber(const SurfaceLattice& lattice, const DivisorClass& omega,
          const DivisorClass& direction, std::vector<std::size_t> support)
      : lattice_(lattice), support_(std::move(support)) {
    const auto& curves = lattice.curves();
    const std::size_t k = support_.size();
    Vector c0(k), c1(k);
    if (k > 0) {
      const Matrix g = lattice.curve_gram(support_);
      Vector r0(k), r1(k);
      for (std::size_t i = 0; i < k; ++i) {
        r0[i] = lattice.intersect(omega, curves[support_[i]].cls);
        r1[i] = -lattice.intersect(direction, curves[support_[i]].cls);
      }
      c0 = *solve(g, r0);
      c1 = *solve(g, r1);
    }
    DivisorClass n0 = DivisorClass::zero(lattice.rank());
    DivisorClass n1 = DivisorClass::zero(lattice.rank());
    for (std::size_t i = 0; i < k; ++i) {
      coeffs_.push_back({c0[i], c1[i]});
      n0 += c0[i] * curves[support_[i]].cls;
      n1 += c1[i] * curves[support_[i]].cls;
    }
    // P(lambda) = (omega - N0) + lambda (-D - N1), tested against every
    // off-support curve and every generator.
    const DivisorClass p0 = omega - n0;
    const DivisorClass p1 = -direction - n1;
    auto add_test = [&](const DivisorClass& x) {
      tests_.push_back({lattice.intersect(p0, x), lattice.intersect(p1, x)});
    };
    for (std::size_t i = 0; i < curves.size(); ++i) {
      if (std::find(support_.begin(), support_.end(), i) == support_.end()) {
        add_test(curves[i].cls);
      }
    }
    for (const auto& g : lattice.cone().psef_generators) add_test(g);
  }

  // Valid at lambda: coefficients and positivity tests nonnegative.
  bool valid_at(const Scalar& lambda) const {
    auto ok = [&](const Affine& f) { return f.at(lambda).sign() >= 0; };
    return std::all_of(coeffs_.begin(), coeffs_.end(), ok) &&
           std::all_of(tests_.begin(), tests_.end(), ok);
  }

  // First lambda > from where a decreasing constraint reaches zero, capped.
  Scalar next_wall(const Scalar& from, const Scalar& cap) const {
    Scalar wall = cap;
    auto visit = [&](const Affine& f) {
      if (f.rate.sign() >= 0) return;
      const Scalar root = -f.offset / f.rate;
      if (root > from && root < wall) wall = root;
    };
    std::for_each(coeffs_.begin(), coeffs_.end(), visit);
    std::for_each(tests_.begin(), tests_.end(), visit);
    return wall;
  }

  Divisor value_at(const Scalar& lambda) const {
    Divisor d;
    for (std::size_t i = 0; i < support_.size(); ++i) {
      d.add(lattice_.curves()[support_[i]].label, coeffs_[i].at(lambda));
    }
    return d;
  }

  Divisor slope() const {
    Divisor d;
    for (std::size_t i = 0; i < support_.size(); ++i) {
      d.add(lattice_.curves()[support_[i]].label, coeffs_[i].rate);
    }
    return d;
  }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (std::size_t i : support_) out.push_back(lattice_.curves()[i].label);
    return out;
  }

 private:
  const SurfaceLattice& lattice_;
  std::vector<std::size_t> support_;
  std::vector<Affine> coeffs_;
  std::vector<Affine> tests_;
};

constexpr int kMaxBisections = 256;

std::vector<std::size_t> support_indices(const SurfaceLattice& lattice,
                                         const ZariskiDecomposition& dec) {
  std::vector<std::size_t> out;
  for (const auto& t : dec.negative.terms()) out.push_back(*lattice.find_curve(t.prime));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PLFamily pl_family(const SurfaceLattice& lattice, const DivisorClass& omega,
                   const DivisorClass& direction) {
  const Scalar tau = threshold_psef(lattice, omega, direction);
  PLFamily family;
  family.breakpoints.push_back(Scalar());

  if (!lattice.curves_mode()) {
    family.breakpoints.push_back(tau);
    family.segments.push_back({Scalar(), tau, {}, {}, {}});
    return family;
  }

  Scalar lambda;
  while (lambda < tau) {
    // Bisect toward lambda until the decomposition's support defines a
    // chamber that is valid all the way back to lambda. Coinciding walls are
    // handled because the support is recomputed from scratch at the probe.
    Scalar probe = tau;
    std::optional<Chamber> chamber;
    for (int step = 0;; ++step) {
      if (step > kMaxBisections) {
        throw Error(ErrorCode::kNonTermination, "chamber search did not converge");
      }
      probe = (lambda + probe) / Scalar(2);
      const ZariskiDecomposition dec =
          zariski_decompose(lattice, omega - probe * direction);
      chamber.emplace(lattice, omega, direction, support_indices(lattice, dec));
      if (chamber->valid_at(lambda)) break;
    }
    const Scalar wall = chamber->next_wall(lambda, tau);
    PLSegment seg{lambda, wall, chamber->value_at(lambda), chamber->slope(),
                  chamber->labels()};
    if (!family.segments.empty() && family.segments.back().slope == seg.slope) {
      auto& prev = family.segments.back();
      prev.end = wall;
      for (const auto& label : seg.support) {
        if (std::find(prev.support.begin(), prev.support.end(), label) ==
            prev.support.end()) {
          prev.support.push_back(label);
        }
      }
      family.breakpoints.back() = wall;
    } else {
      family.segments.push_back(std::move(seg));
      family.breakpoints.push_back(wall);
    }
    lambda = wall;
  }
  return family;
}

RealDivisorialValuation::RealDivisorialValuation(std::string divisor_label, Scalar t)
    : divisor(std::move(divisor_label)), scale(std::move(t)) {
  if (scale.sign() <= 0) {
    throw Error(ErrorCode::kInvalidSigma,
                "valuation scale must be positive, got " + scale.to_string());
  }
}

Scalar minimal_vanishing_order(const SurfaceLattice& lattice,
                               const RealDivisorialValuation& v,
                               const DivisorClass& theta) {
  const std::string prime = lattice.prime_label(v.divisor);
  const ZariskiDecomposition dec = zariski_decompose(lattice, theta);
  return v.scale * dec.negative.coeff(prime);
}

std::vector<std::string> negative_support(const SurfaceLattice& lattice,
                                          const DivisorClass& theta) {
  return zariski_decompose(lattice, theta).support();
}

}  // namespace zardec
