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

#include "zardec/error.hpp"

namespace zardec {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMixedFields: return "MixedFields";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kNestedExtension: return "NestedExtension";
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kInvalidLattice: return "InvalidLattice";
    case ErrorCode::kNotPseudoeffective: return "NotPseudoeffective";
    case ErrorCode::kGramNotNegativeDefinite: return "GramNotNegativeDefinite";
    case ErrorCode::kNonTermination: return "NonTermination";
    case ErrorCode::kNefCertificateFailed: return "NefCertificateFailed";
    case ErrorCode::kNotAmple: return "NotAmple";
    case ErrorCode::kZeroDirection: return "ZeroDirection";
    case ErrorCode::kNotEffective: return "NotEffective";
    case ErrorCode::kUnboundedRay: return "UnboundedRay";
    case ErrorCode::kUnknownDivisor: return "UnknownDivisor";
    case ErrorCode::kInvalidSigma: return "InvalidSigma";
    case ErrorCode::kClassificationUnavailable: return "ClassificationUnavailable";
    case ErrorCode::kHypothesisViolated: return "HypothesisViolated";
    case ErrorCode::kNegativeCoefficients: return "NegativeCoefficients";
    case ErrorCode::kInconsistentVanishing: return "InconsistentVanishing";
    case ErrorCode::kInvalidCurveData: return "InvalidCurveData";
  }
  return "Unknown";
}

}  // namespace zardec
