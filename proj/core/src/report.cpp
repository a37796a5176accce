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

#include "zardec/report.hpp"

#include <algorithm>
#include <sstream>

namespace zardec {
namespace {

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

std::string format_terms(const std::vector<std::pair<std::string, Scalar>>& terms) {
  std::string out;
  for (const auto& [label, c] : terms) {
    if (c.is_zero()) continue;
    if (!c.is_rational()) {
      out += out.empty() ? "" : " + ";
      out += "(" + c.to_string() + ")*" + label;
      continue;
    }
    if (out.empty()) {
      out = c.to_string() + "*" + label;
    } else {
      out += c.sign() < 0 ? " - " : " + ";
      out += c.abs().to_string() + "*" + label;
    }
  }
  return out.empty() ? "0" : out;
}

std::string braces(const std::vector<std::string>& labels) {
  return "{" + join(labels, ", ") + "}";
}

std::string rational_pl_verdict(const GreenFunction& g) {
  try {
    return is_rational_pl(g) ? "true" : "false";
  } catch (const Error& e) {
    return std::string("unavailable (") + e.what() + ")";
  }
}

}  // namespace

std::string format_coeff(const Scalar& c) {
  return c.is_rational() ? c.to_string() : "(" + c.to_string() + ")";
}

std::string format_class(const SurfaceLattice& lattice, const DivisorClass& x) {
  std::vector<std::pair<std::string, Scalar>> terms;
  for (std::size_t i = 0; i < x.size(); ++i) {
    terms.emplace_back(lattice.basis_labels()[i], x.coeffs[i]);
  }
  return format_terms(terms);
}

std::string format_divisor(const Divisor& d) {
  std::vector<std::pair<std::string, Scalar>> terms;
  for (const auto& t : d.terms()) terms.emplace_back(t.prime, t.coeff);
  return format_terms(terms);
}

std::vector<std::string> evaluable_primes(const SurfaceLattice& lattice) {
  std::vector<std::string> out;
  for (const auto& c : lattice.curves()) out.push_back(c.label);
  for (const auto& label : lattice.basis_labels()) {
    const std::string prime = lattice.prime_label(label);
    if (std::find(out.begin(), out.end(), prime) == out.end()) out.push_back(prime);
  }
  return out;
}

std::string validation_report(const SurfaceLattice& lattice, const ValidationReport& report) {
  std::ostringstream os;
  os << "rank = " << lattice.rank() << "\n";
  os << "signature = (" << report.signature.positive << "," << report.signature.negative
     << ")";
  if (report.signature.zero > 0) os << " with " << report.signature.zero << " null directions";
  os << "\n";
  os << "mode = " << (lattice.curves_mode() ? "curves" : "quadric") << "\n";
  if (lattice.curves_mode()) {
    for (const auto& c : lattice.curves()) {
      os << "curve " << c.label << " = " << format_class(lattice, c.cls)
         << ", self-intersection " << lattice.self_intersection(c.cls) << "\n";
    }
    std::vector<std::string> negdef;
    for (const auto& s : report.subsets) {
      if (!s.negative_definite) continue;
      std::vector<std::string> names;
      for (std::size_t i : s.curves) names.push_back(lattice.curves()[i].label);
      negdef.push_back(braces(names));
    }
    os << "negative definite curve subsets = " << (negdef.empty() ? "none" : join(negdef, " "))
       << "\n";
  } else {
    os << "polarization = " << format_class(lattice, lattice.cone().polarization) << "\n";
  }
  for (const auto& issue : report.issues) os << "issue: " << issue << "\n";
  os << "status = " << (report.ok() ? "valid" : "invalid") << "\n";
  return os.str();
}

std::string decomposition_report(const SurfaceLattice& lattice,
                                 const ZariskiDecomposition& dec) {
  std::ostringstream os;
  const auto& cert = dec.certificate;
  auto flag = [](bool b) { return b ? "true" : "false"; };
  os << "theta = " << format_class(lattice, dec.input) << "\n";
  os << "P = " << format_class(lattice, dec.positive) << ", N = "
     << format_divisor(dec.negative) << "\n";
  os << "support = " << braces(dec.support()) << "\n";
  os << "certificate: gram_negdef = " << flag(cert.gram_negdef)
     << ", orthogonality = " << flag(cert.orthogonality)
     << ", positive_nef = " << flag(cert.positive_nef)
     << ", reassembly = " << flag(cert.reassembly) << ", effective = " << flag(cert.effective)
     << "\n";
  return os.str();
}

std::string threshold_report(const Scalar& threshold, const PLFamily& family) {
  std::ostringstream os;
  os << "lambda_psef = " << threshold << "\n";
  os << "rational = " << (threshold.is_rational() ? "true" : "false") << "\n";
  std::vector<std::string> bps;
  for (const auto& b : family.breakpoints) bps.push_back(b.to_string());
  os << "breakpoints = " << join(bps, ", ") << "\n";
  for (const auto& seg : family.segments) {
    os << "segment [" << seg.start << ", " << seg.end << "]: N(start) = "
       << format_divisor(seg.value_at_start) << ", slope = " << format_divisor(seg.slope)
       << ", support = " << braces(seg.support) << "\n";
  }
  return os.str();
}

std::string green_report(const GreenFunction& g) {
  std::ostringstream os;
  os << "tau = " << tau(g) << "\n";
  os << "rational_PL = " << rational_pl_verdict(g) << "\n";
  os << "breakpoints = " << g.breakpoints.size() << "\n";
  for (std::size_t i = 0; i < g.breakpoints.size(); ++i) {
    os << "  lambda = " << g.breakpoints[i] << ": B = " << format_divisor(g.divisors[i])
       << "; class = " << format_class(g.lattice, g.lattice.class_of(g.divisors[i])) << "\n";
  }
  os << "center = " << braces(center_divisorial(g)) << "\n";
  return os.str();
}

std::string flag_report(const FlagGreenFunction& g, const std::vector<Scalar>& grid) {
  std::ostringstream os;
  os << "lambda_S_nef = " << g.lambda_s_nef << "\n";
  os << "rational_PL = " << (g.is_rational_pl() ? "true" : "false") << "\n";
  os << "tau = " << g.tau() << "\n";
  os << "evaluation (w(b_Z), w(b_S)) -> phi:\n";
  for (const auto& z : grid) {
    for (const auto& s : grid) {
      if (s < z) continue;
      os << "  (" << z << ", " << s << ") -> " << evaluate_flag(g, z, s) << "\n";
    }
  }
  return os.str();
}

std::string curve_report(const CurveGreenFunction& g, const std::vector<Scalar>& grid) {
  std::ostringstream os;
  os << "A = " << g.sigma.normalizer << "\n";
  os << "tau = " << g.tau() << "\n";
  os << "rational_PL = " << (g.is_rational_pl() ? "true" : "false") << "\n";
  for (const auto& p : g.sigma.points) {
    os << "point " << p.label << " (t = " << p.scale << "):";
    for (const auto& t : grid) os << " " << t << " -> " << evaluate_curve(g, p.label, t) << ";";
    os << "\n";
  }
  return os.str();
}

std::string pl_family_csv(const SurfaceLattice& lattice, const PLFamily& family) {
  std::ostringstream os;
  os << "lambda";
  for (const auto& label : lattice.basis_labels()) os << "," << label;
  os << "\n";
  for (const auto& lambda : family.breakpoints) {
    const DivisorClass n = lattice.class_of(family.value_at(lambda));
    os << lambda;
    for (const auto& c : n.coeffs) os << "," << c;
    os << "\n";
  }
  return os.str();
}

std::string green_profile_csv(const GreenFunction& g, const std::vector<Scalar>& grid) {
  std::ostringstream os;
  os << "divisor,t,phi\n";
  for (const auto& prime : evaluable_primes(g.lattice)) {
    for (const auto& t : grid) {
      const Scalar value = t.is_zero() ? tau(g) : evaluate(g, {prime, t});
      os << prime << "," << t << "," << value << "\n";
    }
  }
  return os.str();
}

std::string curve_profile_csv(const CurveGreenFunction& g, const std::vector<Scalar>& grid) {
  std::ostringstream os;
  os << "point,t,phi\n";
  for (const auto& p : g.sigma.points) {
    for (const auto& t : grid) os << p.label << "," << t << "," << evaluate_curve(g, p.label, t) << "\n";
  }
  return os.str();
}

}  // namespace zardec
