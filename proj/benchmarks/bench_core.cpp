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

#include <benchmark/benchmark.h>

#include "zardec/golden.hpp"
#include "zardec/green.hpp"
#include "zardec/linalg.hpp"
#include "zardec/scalar.hpp"
#include "zardec/zariski.hpp"

namespace {

using namespace zardec;

// Plane blown up at three general points: basis H, E1, E2, E3.
SurfaceLattice three_points() {
  Matrix g(4, 4);
  g(0, 0) = 1;
  for (std::size_t i = 1; i < 4; ++i) g(i, i) = -1;
  auto v = [](long a, long b, long c, long d) {
    return DivisorClass(Vector{Scalar(a), Scalar(b), Scalar(c), Scalar(d)});
  };
  ConeOracle cone;
  cone.tracked_curves = {{"E1", v(0, 1, 0, 0)},  {"E2", v(0, 0, 1, 0)},  {"E3", v(0, 0, 0, 1)},
                         {"L12", v(1, -1, -1, 0)}, {"L13", v(1, -1, 0, -1)}, {"L23", v(1, 0, -1, -1)}};
  for (const auto& c : cone.tracked_curves) cone.psef_generators.push_back(c.cls);
  return SurfaceLattice({"H", "E1", "E2", "E3"}, g, cone, v(3, -1, -1, -1));
}

void BM_ScalarMultiply(benchmark::State& state) {
  const Scalar x = parse_scalar("3/7 - 5/11*sqrt(7)");
  const Scalar y = parse_scalar("-2/3 + 1/13*sqrt(7)");
  for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_ScalarMultiply);

void BM_ScalarInverse(benchmark::State& state) {
  const Scalar x = parse_scalar("3 - sqrt(7)");
  for (auto _ : state) benchmark::DoNotOptimize(x.inverse());
}
BENCHMARK(BM_ScalarInverse);

void BM_ScalarCompare(benchmark::State& state) {
  const Scalar x = parse_scalar("3 - sqrt(7)");
  const Scalar y = parse_scalar("53/150");
  for (auto _ : state) benchmark::DoNotOptimize(x < y);
}
BENCHMARK(BM_ScalarCompare);

void BM_ZariskiBlowup(benchmark::State& state) {
  const SurfaceLattice bl = golden::blowup();
  const DivisorClass theta(Vector{Scalar(1), Scalar(2)});
  for (auto _ : state) benchmark::DoNotOptimize(zariski_decompose(bl, theta));
}
BENCHMARK(BM_ZariskiBlowup);

void BM_ZariskiThreePoints(benchmark::State& state) {
  const SurfaceLattice lattice = three_points();
  // 3H + 2 E1 + E2: both E1 and E2 and the line through them are involved.
  const DivisorClass theta(Vector{Scalar(1), Scalar(2), Scalar(1), Scalar(0)});
  for (auto _ : state) benchmark::DoNotOptimize(zariski_decompose(lattice, theta));
}
BENCHMARK(BM_ZariskiThreePoints);

void BM_PLFamilyThreePoints(benchmark::State& state) {
  const SurfaceLattice lattice = three_points();
  const DivisorClass d(Vector{Scalar(1), Scalar(-1), Scalar(0), Scalar(0)});
  for (auto _ : state) benchmark::DoNotOptimize(pl_family(lattice, lattice.ample(), d));
}
BENCHMARK(BM_PLFamilyThreePoints);

void BM_GreenAbelian(benchmark::State& state) {
  const SurfaceLattice ab = golden::abelian();
  const DivisorClass omega(Vector{Scalar(1), Scalar(0)});
  const SigmaSet sigma = make_sigma(ab, {{"E", Scalar(1)}});
  for (auto _ : state) benchmark::DoNotOptimize(green_from_sigma(ab, omega, sigma));
}
BENCHMARK(BM_GreenAbelian);

void BM_GreenEvaluate(benchmark::State& state) {
  const SurfaceLattice lattice = three_points();
  const SigmaSet sigma = make_sigma(lattice, {{"L12", Scalar(1)}, {"E3", Scalar(2)}});
  const GreenFunction g = green_from_sigma(lattice, lattice.ample(), sigma);
  const RealDivisorialValuation v("E1", Scalar::fraction(1, 3));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(g, v));
}
BENCHMARK(BM_GreenEvaluate);

}  // namespace

BENCHMARK_MAIN();
