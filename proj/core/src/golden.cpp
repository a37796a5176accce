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

#include "zardec/golden.hpp"

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "zardec/green.hpp"
#include "zardec/zariski.hpp"

namespace zardec::golden {
namespace {

DivisorClass vec(std::initializer_list<Scalar> coeffs, std::string label = {}) {
  return DivisorClass(Vector(coeffs), std::move(label));
}

Matrix gram2(const Scalar& a, const Scalar& b, const Scalar& c) {
  Matrix g(2, 2);
  g(0, 0) = a;
  g(0, 1) = b;
  g(1, 0) = b;
  g(1, 1) = c;
  return g;
}

SurfaceLattice quadric_lattice(std::vector<std::string> labels, const Matrix& gram) {
  ConeOracle cone;
  cone.mode = ConeOracle::Mode::kQuadric;
  cone.polarization = vec({1, 0});
  return SurfaceLattice(std::move(labels), gram, cone, vec({1, 0}));
}

}  // namespace

SurfaceLattice blowup() {
  ConeOracle cone;
  const DivisorClass e = vec({0, 1}, "E");
  const DivisorClass c = vec({1, -1}, "C");
  cone.tracked_curves = {{"E", e}, {"C", c}};
  cone.psef_generators = {e, c};
  return SurfaceLattice({"H", "E"}, gram2(1, 0, -1), cone, vec({2, -1}));
}

SurfaceLattice abelian() { return quadric_lattice({"L", "E"}, gram2(4, 6, 2)); }

FlagConfiguration cutkosky_flag() {
  return make_flag(quadric_lattice({"h", "Z"}, gram2(4, 6, 2)), vec({1, 0}), vec({0, 1}),
                   vec({1, 0}));
}

CurveSigma curve_degree_one() { return make_curve_sigma(1, {{"p", 1}}); }

CurveSigma curve_degree_three() {
  return make_curve_sigma(3, {{"p", 1}, {"q", Scalar::fraction(1, 2)}});
}

bool run_selftest(std::ostream& os) {
  int failures = 0;
  auto check = [&](const std::string& name, const std::function<bool()>& body) {
    bool ok = false;
    std::string detail;
    try {
      ok = body();
    } catch (const std::exception& e) {
      detail = std::string(" (") + e.what() + ")";
    }
    os << (ok ? "PASS " : "FAIL ") << name << detail << "\n";
    if (!ok) ++failures;
  };
  const Scalar half = Scalar::fraction(1, 2);
  const Scalar three_minus_root7 = Scalar(3) - Scalar::sqrt_of(7);

  check("blowup: validate", [] { return validate(blowup()).ok(); });
  check("blowup: decompose H + E = H + 1*E", [] {
    const auto l = blowup();
    const auto dec = zariski_decompose(l, vec({1, 1}));
    return dec.positive == vec({1, 0}) && dec.negative.coeff("E") == Scalar(1) &&
           dec.support().size() == 1 && dec.certificate.holds();
  });
  check("blowup: chamber walk breakpoints {0, 1, 2}", [] {
    const auto l = blowup();
    const auto family = pl_family(l, vec({2, -1}), vec({1, -1}));
    return family.breakpoints == std::vector<Scalar>{0, 1, 2} &&
           family.value_at(Scalar::fraction(3, 2)).coeff("E") == Scalar::fraction(1, 2);
  });
  check("blowup: green function values", [&] {
    const auto l = blowup();
    const auto g = green_from_sigma(l, vec({2, -1}), make_sigma(l, {{"C", 1}}));
    return tau(g) == Scalar(2) && is_rational_pl(g) && evaluate(g, {"C", 1}) == Scalar() &&
           evaluate(g, {"C", half}) == Scalar(1) && evaluate(g, {"E", 1}) == Scalar(1);
  });
  check("abelian: tau = 3 - sqrt(7), not Q-PL", [&] {
    const auto l = abelian();
    const auto g = green_from_sigma(l, vec({1, 0}), make_sigma(l, {{"E", 1}}));
    return tau(g) == three_minus_root7 && !is_rational_pl(g) && g.breakpoints.size() == 2;
  });
  check("cutkosky: lambda_S_nef = 3 - sqrt(7), tau = 1", [&] {
    const auto g = flag_green(cutkosky_flag());
    return g.lambda_s_nef == three_minus_root7 && g.tau() == Scalar(1) &&
           !g.is_rational_pl() && evaluate_flag(g, 1, 1) == Scalar() &&
           evaluate_flag(g, 0, 0) == Scalar(1) && evaluate_flag(g, 0, 1) == three_minus_root7;
  });
  check("curve: degree one", [&] {
    const auto g = green_curve(curve_degree_one());
    return g.tau() == Scalar(1) && evaluate_curve(g, "p", 1) == Scalar() &&
           evaluate_curve(g, "p", half) == half;
  });
  check("curve: degree three", [&] {
    const auto g = green_curve(curve_degree_three());
    return g.tau() == Scalar(1) && evaluate_curve(g, "q", half) == Scalar() &&
           evaluate_curve(g, "q", Scalar::fraction(1, 4)) == half;
  });
  os << (failures == 0 ? "selftest: pass" : "selftest: FAIL") << "\n";
  return failures == 0;
}

}  // namespace zardec::golden
