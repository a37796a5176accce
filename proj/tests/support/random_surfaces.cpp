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

#include "random_surfaces.hpp"

#include <utility>
#include <vector>

namespace zardec::testing {
namespace {

std::string g_last_family;

struct Presentation {
  std::string family;
  std::vector<std::vector<long>> gram;
  std::vector<std::pair<std::string, std::vector<long>>> curves;
  std::vector<long> ample;
};

Presentation hirzebruch(long n) {
  // basis (s, f): s^2 = -n, s.f = 1, f^2 = 0.
  return {"F" + std::to_string(n),
          {{-n, 1}, {1, 0}},
          {{"S", {1, 0}}, {"F", {0, 1}}},
          {1, n + 1}};
}

Presentation plane_blown_up_twice() {
  return {"Bl2P2",
          {{1, 0, 0}, {0, -1, 0}, {0, 0, -1}},
          {{"E1", {0, 1, 0}}, {"E2", {0, 0, 1}}, {"L12", {1, -1, -1}}},
          {3, -1, -1}};
}

Presentation plane_blown_up_thrice() {
  return {"Bl3P2",
          {{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}},
          {{"E1", {0, 1, 0, 0}},
           {"E2", {0, 0, 1, 0}},
           {"E3", {0, 0, 0, 1}},
           {"L12", {1, -1, -1, 0}},
           {"L13", {1, -1, 0, -1}},
           {"L23", {1, 0, -1, -1}}},
          {3, -1, -1, -1}};
}

Presentation plane_blown_up_collinear() {
  return {"Bl3P2-collinear",
          {{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}},
          {{"E1", {0, 1, 0, 0}},
           {"E2", {0, 0, 1, 0}},
           {"E3", {0, 0, 0, 1}},
           {"L", {1, -1, -1, -1}}},
          {4, -1, -1, -1}};
}

Presentation hirzebruch_blown_up(long n) {
  // basis (s, f, e); the point lies off the negative section.
  return {"BlF" + std::to_string(n),
          {{-n, 1, 0}, {1, 0, 0}, {0, 0, -1}},
          {{"S", {1, 0, 0}}, {"E", {0, 0, 1}}, {"G", {0, 1, -1}}},
          {2, 2 * n + 1, -1}};
}

Presentation pick(Rng& rng) {
  switch (std::uniform_int_distribution<int>(0, 5)(rng)) {
    case 0: return hirzebruch(std::uniform_int_distribution<long>(0, 4)(rng));
    case 1: return plane_blown_up_twice();
    case 2: return plane_blown_up_thrice();
    case 3: return plane_blown_up_collinear();
    case 4: return hirzebruch_blown_up(std::uniform_int_distribution<long>(1, 3)(rng));
    default: return hirzebruch(1);
  }
}

using IntMatrix = std::vector<std::vector<long>>;

IntMatrix identity(std::size_t n) {
  IntMatrix m(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// row_i += k * row_j on the left factor.
void add_row(IntMatrix& m, std::size_t i, std::size_t j, long k) {
  for (std::size_t c = 0; c < m.size(); ++c) m[i][c] += k * m[j][c];
}
// col_j -= k * col_i: right-multiplying by the inverse elementary matrix.
void sub_col(IntMatrix& m, std::size_t i, std::size_t j, long k) {
  for (std::size_t r = 0; r < m.size(); ++r) m[r][j] -= k * m[r][i];
}

Vector in_new_basis(const IntMatrix& u, const std::vector<long>& x) {
  Vector y(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    long s = 0;
    for (std::size_t j = 0; j < x.size(); ++j) s += u[i][j] * x[j];
    y[i] = Scalar(s);
  }
  return y;
}

}  // namespace

std::string last_family() { return g_last_family; }

SurfaceLattice random_surface(Rng& rng) {
  const Presentation p = pick(rng);
  g_last_family = p.family;
  const std::size_t n = p.gram.size();

  // New coordinates y = U x with U unimodular; the Gram matrix becomes
  // U^{-T} G U^{-1}.
  IntMatrix u = identity(n);
  IntMatrix u_inv = identity(n);
  const int steps = std::uniform_int_distribution<int>(0, 4)(rng);
  for (int s = 0; s < steps; ++s) {
    const auto i = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
    auto j = std::uniform_int_distribution<std::size_t>(0, n - 2)(rng);
    if (j >= i) ++j;
    const long k = std::uniform_int_distribution<long>(-2, 2)(rng);
    add_row(u, i, j, k);
    sub_col(u_inv, i, j, k);
  }
  Matrix gram(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      long s = 0;
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) s += u_inv[c][a] * p.gram[c][d] * u_inv[d][b];
      }
      gram(a, b) = Scalar(s);
    }
  }
  ConeOracle cone;
  for (const auto& [label, x] : p.curves) {
    DivisorClass cls(in_new_basis(u, x), label);
    cone.tracked_curves.push_back({label, cls});
    cone.psef_generators.push_back(cls);
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
  return SurfaceLattice(labels, gram, cone, DivisorClass(in_new_basis(u, p.ample)));
}

Scalar random_rational(Rng& rng, long lo, long hi, long max_den) {
  const long num = std::uniform_int_distribution<long>(lo, hi)(rng);
  const long den = std::uniform_int_distribution<long>(1, max_den)(rng);
  return Scalar::fraction(num, den);
}

Scalar random_quadratic(Rng& rng, std::int64_t d) {
  return Scalar(random_rational(rng, -9, 9, 6).rational_part(),
                random_rational(rng, -9, 9, 6).rational_part(), d);
}

DivisorClass random_psef(const SurfaceLattice& lattice, Rng& rng) {
  DivisorClass x = DivisorClass::zero(lattice.rank());
  while (x.is_zero()) {
    for (const auto& g : lattice.cone().psef_generators) {
      if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) continue;
      x += random_rational(rng, 0, 5, 3) * g;
    }
    if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
      x += random_rational(rng, 0, 2, 2) * lattice.ample();
    }
  }
  return x;
}

}  // namespace zardec::testing
