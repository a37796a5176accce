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

#include "zardec/curve.hpp"

#include <algorithm>

namespace zardec {

CurveSigma make_curve_sigma(Scalar degree, std::vector<CurvePoint> points) {
  if (degree.sign() <= 0) {
    throw Error(ErrorCode::kInvalidCurveData, "degree must be positive");
  }
  if (points.empty()) throw Error(ErrorCode::kInvalidCurveData, "no points given");
  std::vector<CurvePoint> kept;
  for (auto& p : points) {
    if (p.scale.sign() <= 0) {
      throw Error(ErrorCode::kInvalidCurveData, "scale at " + p.label + " must be positive");
    }
    auto it = std::find_if(kept.begin(), kept.end(),
                           [&](const CurvePoint& q) { return q.label == p.label; });
    if (it == kept.end()) {
      kept.push_back(std::move(p));
    } else if (p.scale < it->scale) {
      it->scale = p.scale;
    }
  }
  Scalar inverse_sum;
  for (const auto& p : kept) inverse_sum += p.scale.inverse();
  const Scalar normalizer = degree / inverse_sum;
  if (!(normalizer * inverse_sum == degree)) {
    throw Error(ErrorCode::kInvalidCurveData, "normalizer identity failed");
  }
  return {std::move(degree), std::move(kept), normalizer};
}

bool CurveGreenFunction::is_rational_pl() const {
  return std::all_of(sigma.points.begin(), sigma.points.end(),
                     [](const CurvePoint& p) { return p.scale.is_rational(); }) &&
         sigma.degree.is_rational();
}

CurveGreenFunction green_curve(const CurveSigma& sigma) { return {sigma}; }

Scalar evaluate_curve(const CurveGreenFunction& g, const std::string& point,
                      const Scalar& t) {
  if (t.sign() < 0) throw Error(ErrorCode::kInvalidCurveData, "scale must be nonnegative");
  const auto& pts = g.sigma.points;
  auto it = std::find_if(pts.begin(), pts.end(),
                         [&](const CurvePoint& p) { return p.label == point; });
  const Scalar& a = g.sigma.normalizer;
  if (it == pts.end()) return a;
  return a * max(Scalar(), Scalar(1) - t / it->scale);
}

}  // namespace zardec
