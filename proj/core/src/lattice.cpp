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

#include "zardec/lattice.hpp"

#include <algorithm>

namespace zardec {

bool DivisorClass::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](const Scalar& c) { return c.is_zero(); });
}

bool DivisorClass::is_rational() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](const Scalar& c) { return c.is_rational(); });
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& other) {
  if (other.size() != size()) {
    throw Error(ErrorCode::kDimensionMismatch, "class rank mismatch");
  }
  for (std::size_t i = 0; i < size(); ++i) coeffs[i] += other.coeffs[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& other) {
  if (other.size() != size()) {
    throw Error(ErrorCode::kDimensionMismatch, "class rank mismatch");
  }
  for (std::size_t i = 0; i < size(); ++i) coeffs[i] -= other.coeffs[i];
  return *this;
}

DivisorClass& DivisorClass::operator*=(const Scalar& factor) {
  for (auto& c : coeffs) c *= factor;
  return *this;
}

Scalar Divisor::coeff(const std::string& prime) const {
  for (const auto& t : terms_) {
    if (t.prime == prime) return t.coeff;
  }
  return {};
}

void Divisor::add(const std::string& prime, const Scalar& c) {
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->prime == prime) {
      it->coeff += c;
      if (it->coeff.is_zero()) terms_.erase(it);
      return;
    }
  }
  if (!c.is_zero()) terms_.push_back({prime, c});
}

Divisor& Divisor::operator+=(const Divisor& other) {
  for (const auto& t : other.terms_) add(t.prime, t.coeff);
  return *this;
}

Divisor& Divisor::operator*=(const Scalar& factor) {
  if (factor.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= factor;
  return *this;
}

bool operator==(const Divisor& x, const Divisor& y) {
  if (x.terms_.size() != y.terms_.size()) return false;
  return std::all_of(x.terms_.begin(), x.terms_.end(), [&](const Divisor::Term& t) {
    return y.coeff(t.prime) == t.coeff;
  });
}

namespace {

void check_field(const Scalar& s, std::int64_t field, const std::string& where) {
  if (!s.is_rational() && s.field() != field) {
    throw Error(ErrorCode::kMixedFields,
                where + ": scalar " + s.to_string() + " outside the declared field");
  }
}

void check_class(const DivisorClass& x, std::size_t rank, std::int64_t field,
                 const std::string& where) {
  if (x.size() != rank) {
    throw Error(ErrorCode::kDimensionMismatch,
                where + ": expected " + std::to_string(rank) + " coefficients, got " +
                    std::to_string(x.size()));
  }
  for (const auto& c : x.coeffs) check_field(c, field, where);
}

}  // namespace

SurfaceLattice::SurfaceLattice(std::vector<std::string> basis_labels, Matrix gram,
                               ConeOracle cone, DivisorClass ample, std::int64_t field)
    : labels_(std::move(basis_labels)),
      gram_(std::move(gram)),
      cone_(std::move(cone)),
      ample_(std::move(ample)),
      field_(field) {
  const std::size_t r = labels_.size();
  if (r == 0) throw Error(ErrorCode::kDimensionMismatch, "lattice needs a basis");
  if (gram_.rows() != r || gram_.cols() != r) {
    throw Error(ErrorCode::kDimensionMismatch, "gram matrix must be rank x rank");
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) check_field(gram_(i, j), field_, "gram");
  }
  check_class(ample_, r, field_, "ample class");
  if (cone_.mode == ConeOracle::Mode::kCurves) {
    for (const auto& g : cone_.psef_generators) check_class(g, r, field_, "generator");
    for (const auto& c : cone_.tracked_curves) {
      check_class(c.cls, r, field_, "curve " + c.label);
    }
  } else {
    check_class(cone_.polarization, r, field_, "polarization");
  }
}

void SurfaceLattice::check_dimension(const DivisorClass& x) const {
  if (x.size() != rank()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "class has " + std::to_string(x.size()) + " coefficients, lattice rank " +
                    std::to_string(rank()));
  }
}

DivisorClass SurfaceLattice::basis_vector(std::size_t i) const {
  DivisorClass e = DivisorClass::zero(rank());
  e.coeffs.at(i) = 1;
  e.label = labels_.at(i);
  return e;
}

Scalar SurfaceLattice::intersect(const DivisorClass& x, const DivisorClass& y) const {
  check_dimension(x);
  check_dimension(y);
  return dot(x.coeffs, gram_ * y.coeffs);
}

bool SurfaceLattice::in_quadric_cone(const DivisorClass& x, bool strict) const {
  const Scalar sq = self_intersection(x);
  const Scalar h = intersect(x, cone_.polarization);
  if (strict) return sq.sign() > 0 && h.sign() > 0;
  return sq.sign() >= 0 && h.sign() >= 0;
}

Matrix SurfaceLattice::generator_matrix() const {
  const auto& gens = cone_.psef_generators;
  Matrix g(rank(), gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (std::size_t i = 0; i < rank(); ++i) g(i, j) = gens[j].coeffs[i];
  }
  return g;
}

bool SurfaceLattice::is_nef(const DivisorClass& x) const {
  check_dimension(x);
  if (!curves_mode()) return in_quadric_cone(x, false);
  return std::all_of(cone_.psef_generators.begin(), cone_.psef_generators.end(),
                     [&](const DivisorClass& g) { return intersect(x, g).sign() >= 0; });
}

bool SurfaceLattice::is_ample(const DivisorClass& x) const {
  check_dimension(x);
  if (!curves_mode()) return in_quadric_cone(x, true);
  if (cone_.psef_generators.empty()) return false;
  return std::all_of(cone_.psef_generators.begin(), cone_.psef_generators.end(),
                     [&](const DivisorClass& g) { return intersect(x, g).sign() > 0; });
}

bool SurfaceLattice::is_psef(const DivisorClass& x) const {
  check_dimension(x);
  if (!curves_mode()) return in_quadric_cone(x, false);
  const Matrix g = generator_matrix();
  const Vector zero_cost(g.cols());
  return maximize(g, x.coeffs, zero_cost).status == LpStatus::kOptimal;
}

bool SurfaceLattice::is_big(const DivisorClass& x) const {
  check_dimension(x);
  if (!curves_mode()) return in_quadric_cone(x, true);
  const Matrix g = generator_matrix();
  if (g.cols() == 0 || zardec::rank(g) != rank()) return false;
  // x is interior iff x - eps * s stays in the cone for some eps > 0, where
  // s (the generator sum) is interior to the full-dimensional cone.
  Matrix a(rank(), g.cols() + 1);
  Vector cost(g.cols() + 1);
  for (std::size_t i = 0; i < rank(); ++i) {
    Scalar s;
    for (std::size_t j = 0; j < g.cols(); ++j) {
      a(i, j) = g(i, j);
      s += g(i, j);
    }
    a(i, g.cols()) = s;
  }
  cost[g.cols()] = 1;
  const LpResult lp = maximize(a, x.coeffs, cost);
  if (lp.status == LpStatus::kUnbounded) return true;
  return lp.status == LpStatus::kOptimal && lp.value.sign() > 0;
}

std::optional<std::size_t> SurfaceLattice::find_curve(const std::string& label) const {
  const auto& cs = cone_.tracked_curves;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (cs[i].label == label) return i;
  }
  return std::nullopt;
}

std::string SurfaceLattice::prime_label(const std::string& label) const {
  if (find_curve(label)) return label;
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw Error(ErrorCode::kUnknownDivisor, "unknown prime divisor '" + label + "'");
  }
  const DivisorClass e = basis_vector(static_cast<std::size_t>(it - labels_.begin()));
  for (const auto& c : cone_.tracked_curves) {
    if (c.cls == e) return c.label;
  }
  return label;
}

DivisorClass SurfaceLattice::prime_class(const std::string& label) const {
  const std::string prime = prime_label(label);
  if (auto i = find_curve(prime)) return cone_.tracked_curves[*i].cls;
  const auto it = std::find(labels_.begin(), labels_.end(), prime);
  return basis_vector(static_cast<std::size_t>(it - labels_.begin()));
}

DivisorClass SurfaceLattice::class_of(const Divisor& divisor) const {
  DivisorClass total = DivisorClass::zero(rank());
  for (const auto& t : divisor.terms()) total += t.coeff * prime_class(t.prime);
  return total;
}

Matrix SurfaceLattice::curve_gram(const std::vector<std::size_t>& curves) const {
  Matrix g(curves.size(), curves.size());
  for (std::size_t i = 0; i < curves.size(); ++i) {
    for (std::size_t j = i; j < curves.size(); ++j) {
      g(i, j) = intersect(cone_.tracked_curves[curves[i]].cls,
                          cone_.tracked_curves[curves[j]].cls);
      g(j, i) = g(i, j);
    }
  }
  return g;
}

ValidationReport validate(const SurfaceLattice& lattice, std::size_t max_subset) {
  ValidationReport report;
  auto issue = [&](std::string text) { report.issues.push_back(std::move(text)); };
  const std::size_t r = lattice.rank();

  if (!lattice.gram().is_symmetric()) {
    issue("gram matrix is not symmetric");
    return report;
  }
  report.signature = inertia(lattice.gram());
  if (report.signature.positive != 1 || report.signature.negative != r - 1) {
    issue("signature (" + std::to_string(report.signature.positive) + "," +
          std::to_string(report.signature.negative) + "," +
          std::to_string(report.signature.zero) +
          ") violates the Hodge index theorem; expected (1," + std::to_string(r - 1) + ",0)");
  }

  const ConeOracle& cone = lattice.cone();
  if (lattice.curves_mode()) {
    if (cone.psef_generators.empty()) issue("curve mode needs at least one psef generator");
    for (std::size_t j = 0; j < cone.psef_generators.size(); ++j) {
      if (cone.psef_generators[j].is_zero()) {
        issue("psef generator " + std::to_string(j) + " is zero");
      }
    }
    for (std::size_t i = 0; i < cone.tracked_curves.size(); ++i) {
      const auto& c = cone.tracked_curves[i];
      if (!lattice.is_psef(c.cls)) {
        issue("tracked curve " + c.label + " is not generated by the psef generators");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (cone.tracked_curves[j].label == c.label) {
          issue("duplicate curve label " + c.label);
        }
      }
    }
    const std::size_t n = cone.tracked_curves.size();
    const std::size_t limit = std::min(max_subset, n);
    // Enumerate subsets in order of size, then lexicographically.
    for (std::size_t k = 1; k <= limit; ++k) {
      std::vector<bool> pick(n, false);
      std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
      do {
        ValidationReport::SubsetCheck check;
        for (std::size_t i = 0; i < n; ++i) {
          if (pick[i]) check.curves.push_back(i);
        }
        check.negative_definite = is_negative_definite(lattice.curve_gram(check.curves));
        report.subsets.push_back(std::move(check));
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
  } else if (lattice.self_intersection(cone.polarization).sign() <= 0) {
    issue("quadric polarization must have positive self-intersection");
  }

  if (!lattice.is_ample(lattice.ample())) issue("designated ample class is not ample");
  return report;
}

}  // namespace zardec
