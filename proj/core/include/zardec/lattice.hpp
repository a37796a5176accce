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

#ifndef ZARDEC_LATTICE_HPP
#define ZARDEC_LATTICE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zardec/linalg.hpp"
#include "zardec/scalar.hpp"

namespace zardec {

/// A numerical class, coordinates over the lattice basis.
struct DivisorClass {
  Vector coeffs;
  std::string label;

  DivisorClass() = default;
  explicit DivisorClass(Vector c, std::string name = {})
      : coeffs(std::move(c)), label(std::move(name)) {}
  static DivisorClass zero(std::size_t rank) { return DivisorClass(Vector(rank)); }

  std::size_t size() const { return coeffs.size(); }
  bool is_zero() const;
  bool is_rational() const;

  DivisorClass& operator+=(const DivisorClass& other);
  DivisorClass& operator-=(const DivisorClass& other);
  DivisorClass& operator*=(const Scalar& factor);

  friend DivisorClass operator+(DivisorClass x, const DivisorClass& y) { return x += y; }
  friend DivisorClass operator-(DivisorClass x, const DivisorClass& y) { return x -= y; }
  friend DivisorClass operator*(const Scalar& c, DivisorClass x) { return x *= c; }
  friend DivisorClass operator-(DivisorClass x) { return x *= Scalar(-1); }
  // Labels are names, not values; equality ignores them.
  friend bool operator==(const DivisorClass& x, const DivisorClass& y) {
    return x.coeffs == y.coeffs;
  }
};

/// A formal finite sum of named prime divisors, kept in insertion order.
class Divisor {
 public:
  struct Term {
    std::string prime;
    Scalar coeff;
  };

  Divisor() = default;

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coeff(const std::string& prime) const;
  void add(const std::string& prime, const Scalar& c);

  Divisor& operator+=(const Divisor& other);
  Divisor& operator*=(const Scalar& factor);
  friend Divisor operator+(Divisor x, const Divisor& y) { return x += y; }
  friend Divisor operator-(Divisor x, const Divisor& y) {
    Divisor neg = y;
    neg *= Scalar(-1);
    return x += neg;
  }
  friend Divisor operator*(const Scalar& c, Divisor x) { return x *= c; }
  /// Same coefficient for every prime (zero coefficients are never stored).
  friend bool operator==(const Divisor& x, const Divisor& y);

 private:
  std::vector<Term> terms_;
};

struct TrackedCurve {
  std::string label;
  DivisorClass cls;
};

/// Presentation of the nef and pseudoeffective cones.
///
/// kCurves: Psef is the cone over `psef_generators`, Nef its dual under the
/// intersection form; `tracked_curves` are the irreducible curves the
/// Zariski engine may put into a negative part.
/// kQuadric: Nef = Psef = {x : x.x >= 0, x.h >= 0} for the polarization h.
struct ConeOracle {
  enum class Mode { kCurves, kQuadric };
  Mode mode = Mode::kCurves;
  std::vector<DivisorClass> psef_generators;
  std::vector<TrackedCurve> tracked_curves;
  DivisorClass polarization;
};

class SurfaceLattice {
 public:
  /// Throws kDimensionMismatch on inconsistent sizes and kMixedFields when a
  /// scalar lies outside Q(sqrt field). Geometric consistency is checked by
  /// validate(), not here.
  SurfaceLattice(std::vector<std::string> basis_labels, Matrix gram,
                 ConeOracle cone, DivisorClass ample, std::int64_t field = 0);

  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  const Matrix& gram() const { return gram_; }
  const ConeOracle& cone() const { return cone_; }
  const DivisorClass& ample() const { return ample_; }
  std::int64_t field() const { return field_; }
  bool curves_mode() const { return cone_.mode == ConeOracle::Mode::kCurves; }
  const std::vector<TrackedCurve>& curves() const { return cone_.tracked_curves; }

  DivisorClass basis_vector(std::size_t i) const;

  Scalar intersect(const DivisorClass& x, const DivisorClass& y) const;
  Scalar self_intersection(const DivisorClass& x) const { return intersect(x, x); }

  bool is_nef(const DivisorClass& x) const;
  bool is_psef(const DivisorClass& x) const;
  bool is_ample(const DivisorClass& x) const;
  bool is_big(const DivisorClass& x) const;

  /// Index of the tracked curve with this label.
  std::optional<std::size_t> find_curve(const std::string& label) const;
  /// Canonical prime name for a tracked-curve or basis label: the curve label
  /// when the class is a tracked curve, otherwise the basis label. Throws
  /// kUnknownDivisor for anything else.
  std::string prime_label(const std::string& label) const;
  DivisorClass prime_class(const std::string& label) const;
  /// Class of a formal divisor whose primes all resolve via prime_class.
  DivisorClass class_of(const Divisor& divisor) const;

  /// Gram matrix of the listed tracked curves.
  Matrix curve_gram(const std::vector<std::size_t>& curves) const;

  /// Throws kDimensionMismatch unless x has this lattice's rank.
  void check_dimension(const DivisorClass& x) const;

 private:
  bool in_quadric_cone(const DivisorClass& x, bool strict) const;
  Matrix generator_matrix() const;

  std::vector<std::string> labels_;
  Matrix gram_;
  ConeOracle cone_;
  DivisorClass ample_;
  std::int64_t field_;
};

struct ValidationReport {
  struct SubsetCheck {
    std::vector<std::size_t> curves;
    bool negative_definite = false;
  };

  std::vector<std::string> issues;
  Inertia signature;
  /// Every subset of tracked curves up to the configured size.
  std::vector<SubsetCheck> subsets;

  bool ok() const { return issues.empty(); }
};

/// Structural diagnostics: symmetry, Hodge signature (1, rank - 1), cone
/// declaration sanity, ampleness of the designated class.
ValidationReport validate(const SurfaceLattice& lattice, std::size_t max_subset = 4);

}  // namespace zardec

#endif  // ZARDEC_LATTICE_HPP
