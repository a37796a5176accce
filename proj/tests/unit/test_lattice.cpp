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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "random_surfaces.hpp"
#include "zardec/golden.hpp"
#include "zardec/lattice.hpp"

namespace zardec {
namespace {

using testing::Rng;

DivisorClass cls(std::initializer_list<Scalar> c) { return DivisorClass(Vector(c)); }

Matrix diag(std::initializer_list<long> entries) {
  Matrix m(entries.size(), entries.size());
  std::size_t i = 0;
  for (long e : entries) {
    m(i, i) = Scalar(e);
    ++i;
  }
  return m;
}

TEST(Lattice, Intersections) {
  const SurfaceLattice bl = golden::blowup();
  const DivisorClass h = cls({1, 0});
  const DivisorClass e = cls({0, 1});
  EXPECT_EQ(bl.intersect(h, h), Scalar(1));
  EXPECT_EQ(bl.intersect(h, e), Scalar(0));
  EXPECT_EQ(bl.intersect(e, e), Scalar(-1));
  EXPECT_EQ(bl.intersect(Scalar(2) * h - e, h - e), Scalar(1));
  EXPECT_THROW(bl.intersect(h, cls({1, 0, 0})), Error);
}

TEST(Lattice, ValidateGoldens) {
  const auto bl = validate(golden::blowup());
  EXPECT_TRUE(bl.ok());
  EXPECT_EQ(bl.signature, (Inertia{1, 1, 0}));
  const auto ab = validate(golden::abelian());
  EXPECT_TRUE(ab.ok());
  EXPECT_EQ(ab.signature, (Inertia{1, 1, 0}));
}

TEST(Lattice, ValidateRejectsPositiveDefinite) {
  ConeOracle cone;
  cone.mode = ConeOracle::Mode::kQuadric;
  cone.polarization = cls({1, 0});
  const SurfaceLattice bad({"A", "B"}, diag({1, 1}), cone, cls({1, 0}));
  const auto report = validate(bad);
  EXPECT_FALSE(report.ok());
  EXPECT_EQ(report.signature, (Inertia{2, 0, 0}));
}

TEST(Lattice, ValidateFlagsBadDeclarations) {
  ConeOracle cone;
  cone.psef_generators = {cls({0, 1})};
  cone.tracked_curves = {{"E", cls({0, 1})}, {"C", cls({1, -1})}};
  const SurfaceLattice bl({"H", "E"}, diag({1, -1}), cone, cls({2, -1}));
  const auto report = validate(bl);
  EXPECT_FALSE(report.ok());
  // C is not generated, and 2H - E is not ample against a cone missing C.
  EXPECT_GE(report.issues.size(), 1U);
}

TEST(Lattice, Construction) {
  ConeOracle cone;
  cone.mode = ConeOracle::Mode::kQuadric;
  cone.polarization = cls({1, 0});
  EXPECT_THROW(SurfaceLattice({"A"}, diag({1, -1}), cone, cls({1, 0})), Error);
  Matrix g = diag({1, -1});
  g(0, 0) = parse_scalar("sqrt(2)");
  try {
    SurfaceLattice({"A", "B"}, g, cone, cls({1, 0}), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMixedFields);
  }
  EXPECT_NO_THROW(SurfaceLattice({"A", "B"}, g, cone, cls({1, 0}), 2));
}

TEST(Lattice, ConeMembershipBlowup) {
  const SurfaceLattice bl = golden::blowup();
  EXPECT_TRUE(bl.is_nef(cls({1, 0})));
  EXPECT_FALSE(bl.is_nef(cls({1, 1})));
  EXPECT_TRUE(bl.is_psef(cls({1, 1})));
  EXPECT_FALSE(bl.is_psef(cls({0, -1})));
  EXPECT_TRUE(bl.is_ample(cls({2, -1})));
  EXPECT_FALSE(bl.is_ample(cls({1, 0})));
  EXPECT_TRUE(bl.is_big(cls({1, 0})));
  EXPECT_FALSE(bl.is_big(cls({0, 1})));
  EXPECT_FALSE(bl.is_big(cls({1, -1})));
  EXPECT_TRUE(bl.is_big(cls({1, 1})));
}

TEST(Lattice, ConeMembershipQuadric) {
  const SurfaceLattice ab = golden::abelian();
  EXPECT_FALSE(ab.is_psef(cls({1, -1})));
  EXPECT_TRUE(ab.is_psef(cls({1, 0})));
  EXPECT_TRUE(ab.is_psef(cls({0, 1})));
  EXPECT_TRUE(ab.is_ample(cls({1, 0})));
  EXPECT_FALSE(ab.is_psef(cls({-1, 0})));
  const DivisorClass boundary = cls({1, 0}) - parse_scalar("3 - sqrt(7)") * cls({0, 1});
  EXPECT_TRUE(ab.is_nef(boundary));
  EXPECT_FALSE(ab.is_ample(boundary));
  EXPECT_FALSE(ab.is_big(boundary));
}

TEST(Lattice, PrimeLabels) {
  const SurfaceLattice bl = golden::blowup();
  EXPECT_EQ(bl.prime_label("C"), "C");
  EXPECT_EQ(bl.prime_label("E"), "E");
  EXPECT_EQ(bl.prime_label("H"), "H");
  EXPECT_THROW((void)bl.prime_label("Q"), Error);
  Divisor d;
  d.add("E", Scalar(2));
  d.add("C", Scalar(1));
  EXPECT_EQ(bl.class_of(d), cls({1, 1}));
}

TEST(Lattice, FormalDivisors) {
  Divisor a;
  a.add("E", Scalar(1));
  a.add("C", Scalar(2));
  Divisor b;
  b.add("C", Scalar(-2));
  const Divisor sum = a + b;
  EXPECT_EQ(sum.terms().size(), 1U);
  EXPECT_EQ(sum.coeff("E"), Scalar(1));
  EXPECT_EQ(sum.coeff("C"), Scalar(0));
  Divisor c;
  c.add("C", Scalar(2));
  c.add("E", Scalar(1));
  EXPECT_EQ(a, c);
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(Scalar(3) * a, a + a + a);
}

DivisorClass random_class(const SurfaceLattice& lattice, Rng& rng) {
  Vector v(lattice.rank());
  for (auto& x : v) x = testing::random_rational(rng, -5, 5, 3);
  return DivisorClass(v);
}

TEST(LatticeProperties, ImplicationsAndDuality) {
  Rng rng(21);
  for (int i = 0; i < 60; ++i) {
    const SurfaceLattice lattice = testing::random_surface(rng);
    ASSERT_TRUE(validate(lattice).ok()) << testing::last_family();
    for (int k = 0; k < 10; ++k) {
      const DivisorClass x =
          k % 2 == 0 ? random_class(lattice, rng) : testing::random_psef(lattice, rng);
      const bool nef = lattice.is_nef(x);
      const bool psef = lattice.is_psef(x);
      if (lattice.is_ample(x)) ASSERT_TRUE(nef);
      if (nef) ASSERT_TRUE(psef);
      if (lattice.is_big(x)) ASSERT_TRUE(psef);
      bool dual = true;
      for (const auto& g : lattice.cone().psef_generators) {
        dual = dual && testing::form(lattice, x.coeffs, g.coeffs).sign() >= 0;
      }
      ASSERT_EQ(nef, dual);
      if (k % 2 == 1) ASSERT_TRUE(psef);
    }
  }
}

TEST(LatticeProperties, QuadricNefEqualsPsef) {
  Rng rng(22);
  const SurfaceLattice ab = golden::abelian();
  for (int i = 0; i < 300; ++i) {
    const DivisorClass x = random_class(ab, rng);
    ASSERT_EQ(ab.is_nef(x), ab.is_psef(x));
    if (ab.is_ample(x)) ASSERT_TRUE(ab.is_nef(x));
    if (ab.is_big(x)) ASSERT_TRUE(ab.is_psef(x));
    const Scalar sq = testing::form(ab, x.coeffs, x.coeffs);
    const Scalar xh = testing::form(ab, x.coeffs, Vector{Scalar(1), Scalar(0)});
    ASSERT_EQ(ab.is_psef(x), sq.sign() >= 0 && xh.sign() >= 0);
  }
}

}  // namespace
}  // namespace zardec
