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

#ifndef ZARDEC_SCALAR_HPP
#define ZARDEC_SCALAR_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "zardec/error.hpp"

namespace zardec {

// GMP keeps mpq_class canonical (positive denominator, reduced) after every
// arithmetic operation, which is the invariant Rational needs.
using Rational = mpq_class;
using Integer = mpz_class;

/// Exact element a + b*sqrt(d) of Q or of one real quadratic field Q(sqrt d).
///
/// Canonical form: d is 0 or square-free and > 1, and b == 0 iff d == 0.
/// Two scalars are equal iff their real values are equal, so structural
/// equality is exact. Arithmetic between elements of different quadratic
/// fields throws ErrorCode::kMixedFields; pure rationals mix with anything.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(const Rational& value) : a_(value) {}  // NOLINT
  Scalar(Rational a, Rational b, std::int64_t d);

  /// Rational p/q; q must be nonzero.
  static Scalar fraction(long p, long q);
  /// sqrt(n) for a nonnegative integer n, reduced to s*sqrt(d).
  static Scalar sqrt_of(const Integer& n);

  const Rational& rational_part() const { return a_; }
  const Rational& irrational_part() const { return b_; }
  std::int64_t field() const { return d_; }

  bool is_rational() const { return d_ == 0; }
  bool is_zero() const { return d_ == 0 && sgn(a_) == 0; }
  int sign() const;

  Scalar conjugate() const;
  /// a^2 - b^2 d; zero only for the zero scalar.
  Rational norm() const;
  Scalar inverse() const;
  Scalar abs() const { return sign() < 0 ? -*this : *this; }

  /// Closest double; for diagnostics only, never used in decisions.
  double approx() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar lhs, const Scalar& rhs) { return lhs += rhs; }
  friend Scalar operator-(Scalar lhs, const Scalar& rhs) { return lhs -= rhs; }
  friend Scalar operator*(Scalar lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Scalar operator/(Scalar lhs, const Scalar& rhs) { return lhs /= rhs; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  /// Throws kMixedFields when x and y live in different quadratic fields.
  friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y);

  /// "p/q" or "p/q + r/s*sqrt(D)"; integers print without "/1".
  std::string to_string() const;

 private:
  void canonicalize();
  static std::int64_t common_field(const Scalar& x, const Scalar& y);

  Rational a_;
  Rational b_;
  std::int64_t d_ = 0;
};

enum class Ordering { kLess, kEqual, kGreater };

Ordering compare(const Scalar& x, const Scalar& y);

/// Parses the text form written by Scalar::to_string. Accepts any sum of
/// terms "[+-] r", "[+-] r*sqrt(D)", "[+-] sqrt(D)" with r = p or p/q, with
/// arbitrary whitespace. Throws kParse on malformed input.
Scalar parse_scalar(std::string_view text);

/// Real roots of c2*x^2 + c1*x + c0 = 0 in ascending order, double roots
/// reported once. Irrational roots carry d = square-free part of the
/// discriminant; if ambient_field != 0 and the roots need a different field,
/// throws kNestedExtension. An inconsistent equation (c2 = c1 = 0 != c0)
/// yields an empty list. Throws kDivisionByZero for the zero polynomial.
std::vector<Scalar> solve_quadratic(const Rational& c2, const Rational& c1,
                                    const Rational& c0,
                                    std::int64_t ambient_field = 0);

/// Square-free part of n > 0 and s with n = s^2 * squarefree.
struct SquareFreeSplit {
  Integer square_root_part;
  Integer square_free_part;
};
SquareFreeSplit split_square_free(const Integer& n);

inline bool is_rational(const Scalar& x) { return x.is_rational(); }

Scalar min(const Scalar& x, const Scalar& y);
Scalar max(const Scalar& x, const Scalar& y);

std::ostream& operator<<(std::ostream& os, const Scalar& x);

}  // namespace zardec

#endif  // ZARDEC_SCALAR_HPP
