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

#ifndef ZARDEC_ERROR_HPP
#define ZARDEC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace zardec {

// Stable numeric codes; the CLI prints them as "E<code>: <message>".
enum class ErrorCode : int {
  kMixedFields = 1,
  kDivisionByZero = 2,
  kNestedExtension = 3,
  kParse = 4,
  kDimensionMismatch = 10,
  kInvalidLattice = 11,
  kNotPseudoeffective = 20,
  kGramNotNegativeDefinite = 21,
  kNonTermination = 22,
  kNefCertificateFailed = 23,
  kNotAmple = 24,
  kZeroDirection = 25,
  kNotEffective = 26,
  kUnboundedRay = 27,
  kUnknownDivisor = 28,
  kInvalidSigma = 30,
  kClassificationUnavailable = 31,
  kHypothesisViolated = 40,
  kNegativeCoefficients = 41,
  kInconsistentVanishing = 42,
  kInvalidCurveData = 50,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace zardec

#endif  // ZARDEC_ERROR_HPP
