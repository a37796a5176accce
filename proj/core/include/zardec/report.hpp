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

#ifndef ZARDEC_REPORT_HPP
#define ZARDEC_REPORT_HPP

#include <string>
#include <vector>

#include "zardec/curve.hpp"
#include "zardec/flag.hpp"
#include "zardec/green.hpp"
#include "zardec/lattice.hpp"
#include "zardec/zariski.hpp"

// Text and CSV renderings. Every scalar is written in the parseable
// exactscalar format, so reports reparse to identical values.
namespace zardec {

/// Rational coefficients print bare, irrational ones parenthesized.
std::string format_coeff(const Scalar& c);
/// "1*H - 1*E"; "0" for the zero class.
std::string format_class(const SurfaceLattice& lattice, const DivisorClass& x);
std::string format_divisor(const Divisor& d);

std::string validation_report(const SurfaceLattice& lattice, const ValidationReport& report);
std::string decomposition_report(const SurfaceLattice& lattice,
                                 const ZariskiDecomposition& dec);
std::string threshold_report(const Scalar& threshold, const PLFamily& family);
std::string green_report(const GreenFunction& g);
std::string flag_report(const FlagGreenFunction& g, const std::vector<Scalar>& grid);
std::string curve_report(const CurveGreenFunction& g, const std::vector<Scalar>& grid);

/// Header "lambda,<basis labels>", one row per breakpoint with the basis
/// coordinates of N(lambda).
std::string pl_family_csv(const SurfaceLattice& lattice, const PLFamily& family);
/// Header "divisor,t,phi"; one row per prime divisor and grid value.
std::string green_profile_csv(const GreenFunction& g, const std::vector<Scalar>& grid);
std::string curve_profile_csv(const CurveGreenFunction& g, const std::vector<Scalar>& grid);

/// Prime labels a Green's function can be evaluated at: tracked curves, then
/// basis labels that are not curves.
std::vector<std::string> evaluable_primes(const SurfaceLattice& lattice);

}  // namespace zardec

#endif  // ZARDEC_REPORT_HPP
