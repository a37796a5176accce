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

#ifndef ZARDEC_CURVE_HPP
#define ZARDEC_CURVE_HPP

#include <string>
#include <vector>

#include "zardec/scalar.hpp"

namespace zardec {

struct CurvePoint {
  std::string label;
  Scalar scale;
};

/// Valuations t_i * ord_{p_i} at distinct points of a curve with deg omega =
/// degree; normalizer satisfies normalizer * sum_i t_i^{-1} = degree.
struct CurveSigma {
  Scalar degree;
  std::vector<CurvePoint> points;
  Scalar normalizer;
};

/// Repeated labels keep only the smallest scale (the others are dominated).
/// Throws kInvalidCurveData on nonpositive degree or scales, or no points.
CurveSigma make_curve_sigma(Scalar degree, std::vector<CurvePoint> points);

/// phi = A max{1 + sum_i t_i^{-1} log|m_{p_i}|, 0}.
struct CurveGreenFunction {
  CurveSigma sigma;

  const Scalar& tau() const { return sigma.normalizer; }
  bool is_rational_pl() const;
};

CurveGreenFunction green_curve(const CurveSigma& sigma);

/// Value at t * ord_p; a label outside sigma is a point where every log term
/// vanishes.
Scalar evaluate_curve(const CurveGreenFunction& g, const std::string& point,
                      const Scalar& t);

}  // namespace zardec

#endif  // ZARDEC_CURVE_HPP
