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

#include "zardec/scalar.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <sstream>

namespace zardec {
namespace {

std::string rational_to_string(const Rational& q) {
  // mpq_class::get_str already omits "/1" for integers.
  return q.get_str();
}

Integer integer_cube_root_floor(const Integer& n) {
  Integer r;
  mpz_root(r.get_mpz_t(), n.get_mpz_t(), 3);
  return r;
}

}  // namespace

SquareFreeSplit split_square_free(const Integer& n) {
  if (sgn(n) <= 0) {
    throw Error(ErrorCode::kParse, "square-free split needs a positive integer");
  }
  Integer rest = n;
  Integer square = 1;
  Integer free = 1;
  // After removing every prime <= cbrt(n), the cofactor has at most two prime
  // factors, so it is square-free unless it is a perfect square.
  const Integer limit = integer_cube_root_floor(n) + 1;
  for (Integer p = 2; p <= limit && p * p <= rest; p += (p == 2 ? 1 : 2)) {
    int multiplicity = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()) != 0) {
      rest /= p;
      ++multiplicity;
    }
    for (int i = 0; i + 1 < multiplicity; i += 2) square *= p;
    if (multiplicity % 2 == 1) free *= p;
  }
  if (rest > 1) {
    if (mpz_perfect_square_p(rest.get_mpz_t()) != 0) {
      Integer root;
      mpz_sqrt(root.get_mpz_t(), rest.get_mpz_t());
      square *= root;
    } else {
      free *= rest;
    }
  }
  return {square, free};
}

Scalar::Scalar(Rational a, Rational b, std::int64_t d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d_ < 0) throw Error(ErrorCode::kParse, "negative radicand");
  canonicalize();
}

Scalar Scalar::fraction(long p, long q) {
  if (q == 0) throw Error(ErrorCode::kDivisionByZero, "zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return Scalar(r);
}

Scalar Scalar::sqrt_of(const Integer& n) {
  if (sgn(n) < 0) throw Error(ErrorCode::kParse, "sqrt of a negative number");
  if (sgn(n) == 0) return Scalar();
  auto [s, d] = split_square_free(n);
  if (!d.fits_slong_p()) {
    throw Error(ErrorCode::kNestedExtension, "radicand too large");
  }
  return Scalar(Rational(0), Rational(s), d.get_si());
}

void Scalar::canonicalize() {
  if (d_ == 0 || sgn(b_) == 0) {
    b_ = 0;
    d_ = 0;
    return;
  }
  if (d_ == 1) {
    a_ += b_;
    b_ = 0;
    d_ = 0;
    return;
  }
  auto [s, free] = split_square_free(Integer(d_));
  if (free == 1) {
    a_ += b_ * s;
    b_ = 0;
    d_ = 0;
    return;
  }
  b_ *= s;
  d_ = free.get_si();
}

std::int64_t Scalar::common_field(const Scalar& x, const Scalar& y) {
  if (x.d_ == 0) return y.d_;
  if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
  throw Error(ErrorCode::kMixedFields,
              "scalars from Q(sqrt " + std::to_string(x.d_) + ") and Q(sqrt " +
                  std::to_string(y.d_) + ")");
}

int Scalar::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: the larger of a^2 and b^2 d wins.
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * d_;
  const int c = cmp(lhs, rhs);
  return c > 0 ? sa : sb;
}

Scalar Scalar::conjugate() const {
  Scalar c = *this;
  c.b_ = -c.b_;
  return c;
}

Rational Scalar::norm() const { return Rational(a_ * a_ - b_ * b_ * d_); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  const Rational n = norm();
  Scalar r;
  r.a_ = a_ / n;
  r.b_ = -b_ / n;
  r.d_ = d_;
  r.canonicalize();
  return r;
}

double Scalar::approx() const {
  return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(d_));
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  const std::int64_t d = common_field(*this, other);
  a_ += other.a_;
  b_ += other.b_;
  d_ = d;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  const std::int64_t d = common_field(*this, other);
  a_ -= other.a_;
  b_ -= other.b_;
  d_ = d;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  const std::int64_t d = common_field(*this, other);
  Rational a = a_ * other.a_ + b_ * other.b_ * d;
  Rational b = a_ * other.b_ + b_ * other.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  d_ = d;
  canonicalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  common_field(*this, other);
  return *this *= other.inverse();
}

std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
  const int s = (x - y).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Ordering compare(const Scalar& x, const Scalar& y) {
  const auto c = x <=> y;
  if (c < 0) return Ordering::kLess;
  if (c > 0) return Ordering::kGreater;
  return Ordering::kEqual;
}

std::string Scalar::to_string() const {
  if (d_ == 0) return rational_to_string(a_);
  std::string out;
  if (sgn(a_) != 0) {
    out = rational_to_string(a_);
    out += sgn(b_) < 0 ? " - " : " + ";
    out += rational_to_string(Rational(::abs(b_)));
  } else {
    out = rational_to_string(b_);
  }
  out += "*sqrt(" + std::to_string(d_) + ")";
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) {
  return os << x.to_string();
}

Scalar min(const Scalar& x, const Scalar& y) { return y < x ? y : x; }
Scalar max(const Scalar& x, const Scalar& y) { return x < y ? y : x; }

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c)) == 0) text_ += c;
    }
  }

  Scalar parse() {
    if (text_.empty()) fail("empty scalar");
    Scalar total;
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Scalar term = parse_term();
      total += sign < 0 ? -term : term;
      first = false;
    }
    return total;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::kParse,
                why + " in scalar \"" + text_ + "\" at offset " +
                    std::to_string(pos_));
  }

  bool at_sqrt() const { return text_.compare(pos_, 5, "sqrt(") == 0; }

  Scalar parse_sqrt() {
    pos_ += 5;
    const Integer n = parse_integer();
    if (peek() != ')') fail("expected ')'");
    ++pos_;
    return Scalar::sqrt_of(n);
  }

  Integer parse_integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek())) != 0) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(text_.substr(start, pos_ - start));
  }

  Scalar parse_term() {
    if (at_sqrt()) return parse_sqrt();
    Rational r(parse_integer());
    if (peek() == '/') {
      ++pos_;
      const Integer den = parse_integer();
      if (sgn(den) == 0) {
        throw Error(ErrorCode::kDivisionByZero, "zero denominator in \"" + text_ + "\"");
      }
      r /= Rational(den);
    }
    Scalar term(r);
    if (peek() == '*') {
      ++pos_;
      if (!at_sqrt()) fail("expected sqrt(...) after '*'");
      term *= parse_sqrt();
    }
    return term;
  }

  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return ScalarParser(text).parse(); }

std::vector<Scalar> solve_quadratic(const Rational& c2, const Rational& c1,
                                    const Rational& c0,
                                    std::int64_t ambient_field) {
  if (sgn(c2) == 0) {
    if (sgn(c1) == 0) {
      if (sgn(c0) == 0) {
        throw Error(ErrorCode::kDivisionByZero, "zero polynomial has no isolated roots");
      }
      return {};
    }
    return {Scalar(Rational(-c0 / c1))};
  }
  const Rational disc = c1 * c1 - 4 * c2 * c0;
  if (sgn(disc) < 0) return {};
  const Rational vertex = -c1 / (2 * c2);
  if (sgn(disc) == 0) return {Scalar(vertex)};
  // sqrt(p/q) = sqrt(p*q)/q.
  const Integer pq = disc.get_num() * disc.get_den();
  const Scalar root = Scalar::sqrt_of(pq) / Scalar(Rational(disc.get_den()));
  if (!root.is_rational() && ambient_field != 0 && root.field() != ambient_field) {
    throw Error(ErrorCode::kNestedExtension,
                "roots need Q(sqrt " + std::to_string(root.field()) +
                    ") inside Q(sqrt " + std::to_string(ambient_field) + ")");
  }
  const Scalar half_width = root / Scalar(Rational(2 * ::abs(c2)));
  return {Scalar(vertex) - half_width, Scalar(vertex) + half_width};
}

}  // namespace zardec
