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

// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Randomized criteria use fixed seeds so runs are reproducible.

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "random_surfaces.hpp"
#include "zardec/curve.hpp"
#include "zardec/error.hpp"
#include "zardec/flag.hpp"
#include "zardec/golden.hpp"
#include "zardec/green.hpp"
#include "zardec/zariski.hpp"

namespace {

using namespace zardec;
using zardec::testing::Rng;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

void expect(Outcome& out, bool condition, const std::string& why) {
  if (!condition) out.fail(why);
}

std::vector<std::string> labels_of(const Divisor& d) {
  std::vector<std::string> out;
  for (const auto& t : d.terms()) out.push_back(t.prime);
  return out;
}

std::vector<Scalar> coeffs_of(const Divisor& d) {
  std::vector<Scalar> out;
  for (const auto& t : d.terms()) out.push_back(t.coeff);
  return out;
}

DivisorClass random_ample(const SurfaceLattice& lattice, Rng& rng) {
  for (;;) {
    DivisorClass omega = testing::random_rational(rng, 1, 3, 1) * lattice.ample();
    if (std::uniform_int_distribution<int>(0, 1)(rng) == 0) {
      omega += testing::random_psef(lattice, rng);
    }
    if (lattice.is_ample(omega)) return omega;
  }
}

SigmaSet random_sigma(const SurfaceLattice& lattice, Rng& rng) {
  std::vector<RealDivisorialValuation> vals;
  for (const auto& c : lattice.curves()) {
    if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) {
      vals.emplace_back(c.label, testing::random_rational(rng, 1, 4, 3));
    }
  }
  if (vals.empty()) {
    const auto& c = lattice.curves()[std::uniform_int_distribution<std::size_t>(
        0, lattice.curves().size() - 1)(rng)];
    vals.emplace_back(c.label, testing::random_rational(rng, 1, 4, 3));
  }
  return make_sigma(lattice, std::move(vals));
}

// Criterion 1 and 2 share the same draws.
Outcome zariski_draws(bool certificates) {
  Outcome out;
  Rng rng(20261016);
  int lattices = 0;
  int nontrivial = 0;
  for (; lattices < 120; ++lattices) {
    const SurfaceLattice lattice = testing::random_surface(rng);
    if (!validate(lattice).ok()) {
      out.fail("generated lattice failed validation (" + testing::last_family() + ")");
      continue;
    }
    for (int k = 0; k < 3; ++k) {
      const DivisorClass theta = testing::random_psef(lattice, rng);
      const ZariskiDecomposition dec = zariski_decompose(lattice, theta);
      if (!dec.negative.is_zero()) ++nontrivial;
      const std::string where = testing::last_family() + " draw " + std::to_string(lattices);
      if (certificates) {
        const auto failures = testing::independent_certificate(
            lattice, theta.coeffs, dec.positive.coeffs, labels_of(dec.negative),
            coeffs_of(dec.negative));
        expect(out, failures.empty(),
               where + ": " + (failures.empty() ? std::string() : failures.front()));
        expect(out, verify_certificate(lattice, dec).holds(), where + ": library certificate");
        continue;
      }
      const auto oracle = testing::brute_force_zariski(lattice, theta.coeffs);
      expect(out, oracle.valid_subsets == 1,
             where + ": oracle found " + std::to_string(oracle.valid_subsets) + " subsets");
      if (!oracle.decomposition) continue;
      expect(out, oracle.decomposition->positive == dec.positive.coeffs, where + ": P differs");
      Divisor expected;
      for (std::size_t a = 0; a < oracle.decomposition->support.size(); ++a) {
        expected.add(lattice.curves()[oracle.decomposition->support[a]].label,
                     oracle.decomposition->coeffs[a]);
      }
      expect(out, expected == dec.negative, where + ": N differs");
      auto want = labels_of(expected);
      auto got = dec.support();
      std::sort(want.begin(), want.end());
      std::sort(got.begin(), got.end());
      expect(out, want == got, where + ": support differs");
    }
  }
  out.detail = std::to_string(lattices) + " lattices, 3 classes each, " +
               std::to_string(nontrivial) + " with N != 0" +
               (out.ok ? std::string() : "; " + out.detail);
  return out;
}

Outcome criterion_abelian() {
  Outcome out;
  const SurfaceLattice lattice = golden::abelian();
  const DivisorClass omega = lattice.basis_vector(0);
  const GreenFunction g =
      green_from_sigma(lattice, omega, make_sigma(lattice, {{"E", Scalar(1)}}));
  // (L - x E)^2 = 4 - 12 x + 2 x^2, smaller root by the quadratic formula.
  const Scalar disc = Scalar(144) - Scalar(4 * 2 * 4);
  const Scalar expected = (Scalar(12) - Scalar::sqrt_of(Integer(112))) / Scalar(4);
  expect(out, disc == Scalar(112), "discriminant");
  expect(out, (Scalar(4) - Scalar(12) * expected + Scalar(2) * expected * expected).is_zero(),
         "oracle root does not solve the quadratic");
  expect(out, tau(g) == expected, "tau = " + tau(g).to_string());
  expect(out, tau(g) == parse_scalar("3 - sqrt(7)"), "tau literal");
  expect(out, !is_rational_pl(g), "rational_PL verdict");
  expect(out, g.breakpoints.size() == 2, "breakpoint count");
  Divisor b_tau;
  b_tau.add("E", -expected);
  expect(out, slice(g, tau(g)) == b_tau, "B_tau");
  for (int k = 1; k <= 10; ++k) {
    const Scalar t = Scalar::fraction(k, 5);
    const Scalar closed = expected * max(Scalar(), Scalar(1) - t);
    expect(out, evaluate(g, {"E", t}) == closed, "phi(" + t.to_string() + " ord_E)");
  }
  out.detail = "tau = " + tau(g).to_string();
  return out;
}

Outcome criterion_chambers() {
  Outcome out;
  const SurfaceLattice lattice = golden::blowup();
  const DivisorClass h = lattice.basis_vector(0);
  const DivisorClass e = lattice.basis_vector(1);
  const DivisorClass omega = Scalar(2) * h - e;
  const GreenFunction g =
      green_from_sigma(lattice, omega, make_sigma(lattice, {{"C", Scalar(1)}}));
  expect(out, g.breakpoints == std::vector<Scalar>{Scalar(0), Scalar(1), Scalar(2)},
         "breakpoints");
  // Hand computation: omega - lambda C = (2 - lambda) H + (lambda - 1) E; for
  // lambda >= 1 the E coefficient is effective and E is contracted away.
  for (int k = 0; k <= 8; ++k) {
    const Scalar lambda = Scalar::fraction(k, 4);
    Divisor hand;
    if (Scalar(1) < lambda) hand.add("E", lambda - Scalar(1));
    expect(out, g.family.value_at(lambda) == hand, "N(" + lambda.to_string() + ")");
    const auto dec = zariski_decompose(lattice, omega - lambda * (h - e));
    expect(out, dec.negative == hand, "per-lambda decomposition at " + lambda.to_string());
  }
  expect(out, evaluate(g, {"C", Scalar(1)}) == Scalar(0), "phi(ord_C)");
  expect(out, evaluate(g, {"C", Scalar::fraction(1, 2)}) == Scalar(1), "phi(ord_C / 2)");
  expect(out, evaluate(g, {"E", Scalar(1)}) == Scalar(1), "phi(ord_E)");
  expect(out, tau(g) == Scalar(2), "tau");
  return out;
}

Outcome criterion_cutkosky() {
  Outcome out;
  const FlagConfiguration cfg = golden::cutkosky_flag();
  const FlagGreenFunction g = flag_green(cfg);
  const Scalar expected = parse_scalar("3 - sqrt(7)");
  expect(out, g.lambda_s_nef == expected, "lambda_nef = " + g.lambda_s_nef.to_string());
  expect(out, g.lambda_s_nef < Scalar(1), "lambda_nef < 1");
  // Independent check: omega - l Z is on the boundary (self-intersection 0).
  const DivisorClass boundary = cfg.omega_restr - expected * cfg.z_restr;
  expect(out, testing::form(cfg.s_lattice, boundary.coeffs, boundary.coeffs).is_zero(),
         "boundary self-intersection");
  expect(out, g.tau() == Scalar(1), "tau");
  expect(out, evaluate_flag(g, Scalar(1), Scalar(1)) == Scalar(0), "phi(1,1)");
  expect(out, evaluate_flag(g, Scalar(0), Scalar(0)) == Scalar(1), "phi(0,0)");
  expect(out, evaluate_flag(g, Scalar(0), Scalar(1)) == expected, "phi(0,1)");
  expect(out, !g.is_rational_pl(), "rational verdict");
  return out;
}

Outcome criterion_flag_zariski() {
  Outcome out;
  const FlagConfiguration cfg = golden::cutkosky_flag();
  Rng rng(6);
  for (int i = 0; i < 20; ++i) {
    const Scalar a = testing::random_rational(rng, 0, 9, 4);
    const Scalar b = testing::random_rational(rng, 0, 9, 4);
    const FlagDecomposition dec = flag_zariski(cfg, a, b);
    expect(out, dec.negative_s == b, "N(a, b) != b S");
    expect(out, dec.theta_nef_coeff == a && dec.s_coeff == b, "coordinates");
    const FlagDecomposition nef = flag_zariski_nef(cfg, a, b);
    expect(out, nef.negative_s.is_zero(), "N on the nef subcone");
  }
  out.detail = "20 pairs";
  return out;
}

Outcome criterion_curve() {
  Outcome out;
  struct Case {
    CurveSigma sigma;
    Scalar a;
  };
  const std::vector<Case> cases = {{golden::curve_degree_one(), Scalar(1)},
                                   {golden::curve_degree_three(), Scalar(1)}};
  for (const auto& c : cases) {
    const CurveGreenFunction g = green_curve(c.sigma);
    Scalar inverse_sum;
    for (const auto& p : c.sigma.points) inverse_sum += Scalar(1) / p.scale;
    expect(out, g.tau() == c.a, "A");
    expect(out, g.tau() * inverse_sum == c.sigma.degree, "A * sum 1/t != deg");
    for (const auto& p : c.sigma.points) {
      for (int k = 0; k <= 12; ++k) {
        const Scalar t = Scalar::fraction(k, 4);
        const Scalar ratio = t / p.scale;
        const Scalar closed = Scalar(1) < ratio ? Scalar() : c.a * (Scalar(1) - ratio);
        expect(out, evaluate_curve(g, p.label, t) == closed, "phi at " + p.label);
      }
    }
    expect(out, evaluate_curve(g, "elsewhere", Scalar(1)) == c.a, "phi off sigma");
  }
  return out;
}

Outcome criterion_convexity() {
  Outcome out;
  Rng rng(8);
  int trials = 0;
  int chambers = 0;
  for (; trials < 240; ++trials) {
    const SurfaceLattice lattice = testing::random_surface(rng);
    const std::string where = testing::last_family() + " trial " + std::to_string(trials);
    const DivisorClass x = testing::random_psef(lattice, rng);
    const DivisorClass y = testing::random_psef(lattice, rng);
    const Scalar s = testing::random_rational(rng, 0, 6, 6) / Scalar(6);
    const Scalar c = testing::random_rational(rng, 1, 5, 3);
    const Divisor nx = zariski_decompose(lattice, x).negative;
    const Divisor ny = zariski_decompose(lattice, y).negative;
    const Divisor mixed =
        zariski_decompose(lattice, s * x + (Scalar(1) - s) * y).negative;
    expect(out, testing::divisor_leq(mixed, s * nx + (Scalar(1) - s) * ny),
           where + ": N not convex");
    expect(out, zariski_decompose(lattice, c * x).negative == c * nx,
           where + ": N not homogeneous");

    const DivisorClass omega = random_ample(lattice, rng);
    const GreenFunction g = green_from_sigma(lattice, omega, random_sigma(lattice, rng));
    if (g.breakpoints.size() > 2) ++chambers;
    const Scalar l1 = tau(g) * testing::random_rational(rng, 0, 8, 1) / Scalar(8);
    const Scalar l2 = tau(g) * testing::random_rational(rng, 0, 8, 1) / Scalar(8);
    const Scalar w = testing::random_rational(rng, 0, 4, 1) / Scalar(4);
    const Divisor b1 = slice(g, l1);
    const Divisor b2 = slice(g, l2);
    expect(out, testing::divisor_leq(w * b1 + (Scalar(1) - w) * b2,
                                     slice(g, w * l1 + (Scalar(1) - w) * l2)),
           where + ": B not concave");
    if (l1 < l2) expect(out, testing::divisor_leq(b2, b1), where + ": B not decreasing");
    if (l2 < l1) expect(out, testing::divisor_leq(b1, b2), where + ": B not decreasing");
  }
  out.detail = std::to_string(trials) + " trials, " + std::to_string(chambers) +
               " crossing a wall" + (out.ok ? "" : "; " + out.detail);
  return out;
}

void check_normalization(Outcome& out, const GreenFunction& g, const DivisorClass& d,
                         const std::string& where) {
  for (const auto& v : g.sigma.valuations) {
    expect(out, evaluate(g, v).is_zero(), where + ": phi(v) != 0 on sigma");
  }
  expect(out, tau(g) == threshold_psef(g.lattice, g.omega, d), where + ": tau != threshold");
  Scalar sup;
  for (std::size_t i = 0; i < g.breakpoints.size(); ++i) {
    sup = max(sup, g.breakpoints[i]);
    for (const auto& t : g.divisors[i].terms()) {
      expect(out, t.coeff.sign() < 0, where + ": B_i not antieffective");
    }
  }
  // With every B_i <= 0 the supremum is the limit t -> 0, i.e. the largest
  // lambda_i.
  expect(out, sup == tau(g), where + ": sup != tau");
  std::vector<std::string> primes;
  for (const auto& c : g.lattice.curves()) primes.push_back(c.label);
  for (const auto& l : g.lattice.basis_labels()) primes.push_back(l);
  for (const auto& p : primes) {
    for (int k = 1; k <= 12; ++k) {
      const Scalar value = evaluate(g, {p, Scalar::fraction(k, 4)});
      expect(out, value.sign() >= 0, where + ": negative value at " + p);
      expect(out, !(tau(g) < value), where + ": value above tau at " + p);
    }
  }
}

Outcome criterion_normalization() {
  Outcome out;
  Rng rng(9);
  int built = 0;
  for (int i = 0; i < 150; ++i) {
    const SurfaceLattice lattice = testing::random_surface(rng);
    const DivisorClass omega = random_ample(lattice, rng);
    const SigmaSet sigma = random_sigma(lattice, rng);
    const GreenFunction g = green_from_sigma(lattice, omega, sigma);
    check_normalization(out, g, lattice.class_of(sigma.divisor),
                        testing::last_family() + " draw " + std::to_string(i));
    ++built;
  }
  {
    const SurfaceLattice lattice = golden::abelian();
    const SigmaSet sigma = make_sigma(lattice, {{"E", Scalar(1)}});
    check_normalization(out, green_from_sigma(lattice, lattice.basis_vector(0), sigma),
                        lattice.class_of(sigma.divisor), "abelian");
    ++built;
  }
  {
    const SurfaceLattice lattice = golden::blowup();
    const DivisorClass omega = Scalar(2) * lattice.basis_vector(0) - lattice.basis_vector(1);
    for (const std::string& prime : {"C", "E"}) {
      const SigmaSet sigma = make_sigma(lattice, {{prime, Scalar(1)}});
      check_normalization(out, green_from_sigma(lattice, omega, sigma),
                          lattice.class_of(sigma.divisor), "blowup " + prime);
      ++built;
    }
  }
  out.detail = std::to_string(built) + " Green's functions" +
               (out.ok ? "" : "; " + out.detail);
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "zariski decomposition equals brute-force oracle", [] { return zariski_draws(false); }},
      {2, "independent certificate re-verification", [] { return zariski_draws(true); }},
      {3, "abelian surface irrational threshold", criterion_abelian},
      {4, "blowup chamber crossing", criterion_chambers},
      {5, "flag example with irrational nef threshold", criterion_cutkosky},
      {6, "flag negative part formula", criterion_flag_zariski},
      {7, "curve closed form", criterion_curve},
      {8, "convexity, concavity and monotonicity", criterion_convexity},
      {9, "Green's function normalization", criterion_normalization},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& ex) {
      out.fail(std::string("exception: ") + ex.what());
    }
    std::cout << (out.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name;
    if (!out.detail.empty()) std::cout << " (" << out.detail << ")";
    std::cout << "\n";
    if (!out.ok) ++failures;
  }
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
