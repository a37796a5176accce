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

#include "zardec/problem.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"

namespace zardec {
namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void parse_error(const std::string& where, const std::string& why) {
  throw Error(ErrorCode::kParse, where + ": " + why);
}

void allow_keys(const Json& object, const std::string& where,
                std::initializer_list<const char*> keys) {
  if (!object.is_object()) parse_error(where, "expected an object");
  for (const auto& [key, value] : object.items()) {
    if (std::none_of(keys.begin(), keys.end(),
                     [&](const char* k) { return key == k; })) {
      parse_error(where, "unknown key '" + key + "'");
    }
  }
}

const Json& require(const Json& object, const char* key, const std::string& where) {
  if (!object.contains(key)) parse_error(where, std::string("missing key '") + key + "'");
  return object.at(key);
}

std::string require_string(const Json& value, const std::string& where) {
  if (!value.is_string()) parse_error(where, "expected a string");
  return value.get<std::string>();
}

class Reader {
 public:
  explicit Reader(std::int64_t field) : field_(field) {}

  Scalar scalar(const Json& value, const std::string& where) const {
    Scalar s;
    if (value.is_number_integer()) {
      s = Scalar(Rational(value.get<long>()));
    } else if (value.is_string()) {
      try {
        s = parse_scalar(value.get<std::string>());
      } catch (const Error& e) {
        parse_error(where, e.what());
      }
    } else {
      parse_error(where, "scalars are integers or strings like \"p/q + r/s*sqrt(D)\"");
    }
    if (!s.is_rational() && s.field() != field_) {
      parse_error(where, "scalar " + s.to_string() + " lies outside the declared field");
    }
    return s;
  }

  // A class is an array of scalars or the name of a known class.
  DivisorClass divisor_class(const Json& value, const std::string& where,
                             const std::vector<std::pair<std::string, DivisorClass>>& known,
                             std::size_t rank) const {
    if (value.is_string()) {
      const std::string name = value.get<std::string>();
      for (const auto& [n, c] : known) {
        if (n == name) return c;
      }
      parse_error(where, "unknown class name '" + name + "'");
    }
    if (!value.is_array()) parse_error(where, "expected a coefficient array or class name");
    if (value.size() != rank) {
      parse_error(where, "expected " + std::to_string(rank) + " coefficients");
    }
    Vector coeffs;
    for (std::size_t i = 0; i < value.size(); ++i) {
      coeffs.push_back(scalar(value[i], where + "[" + std::to_string(i) + "]"));
    }
    return DivisorClass(std::move(coeffs));
  }

  SurfaceLattice lattice(const Json& node, const std::string& where) const {
    allow_keys(node, where, {"basis", "gram", "cone", "ample"});
    const Json& basis = require(node, "basis", where);
    if (!basis.is_array() || basis.empty()) parse_error(where, "basis must be a nonempty array");
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, DivisorClass>> known;
    for (const auto& b : basis) {
      const std::string label = require_string(b, where + ".basis");
      if (std::find(labels.begin(), labels.end(), label) != labels.end()) {
        parse_error(where, "duplicate basis label '" + label + "'");
      }
      labels.push_back(label);
    }
    const std::size_t r = labels.size();
    for (std::size_t i = 0; i < r; ++i) {
      DivisorClass e = DivisorClass::zero(r);
      e.coeffs[i] = 1;
      e.label = labels[i];
      known.emplace_back(labels[i], e);
    }

    const Json& gram_node = require(node, "gram", where);
    if (!gram_node.is_array() || gram_node.size() != r) {
      parse_error(where + ".gram", "expected " + std::to_string(r) + " rows");
    }
    Matrix gram(r, r);
    for (std::size_t i = 0; i < r; ++i) {
      const Json& row = gram_node[i];
      if (!row.is_array() || row.size() != r) {
        parse_error(where + ".gram", "row " + std::to_string(i) + " has the wrong length");
      }
      for (std::size_t j = 0; j < r; ++j) {
        gram(i, j) = scalar(row[j], where + ".gram");
      }
    }

    const std::string cone_where = where + ".cone";
    const Json& cone_node = require(node, "cone", where);
    ConeOracle cone;
    const std::string mode = require_string(require(cone_node, "mode", cone_where), cone_where);
    if (mode == "curves") {
      allow_keys(cone_node, cone_where, {"mode", "generators", "curves"});
      if (cone_node.contains("curves")) {
        const Json& curves = cone_node.at("curves");
        if (!curves.is_array()) parse_error(cone_where, "curves must be an array");
        for (const auto& c : curves) {
          allow_keys(c, cone_where + ".curves", {"label", "class"});
          TrackedCurve tc;
          tc.label = require_string(require(c, "label", cone_where), cone_where);
          tc.cls = divisor_class(require(c, "class", cone_where), cone_where + "." + tc.label,
                                 known, r);
          tc.cls.label = tc.label;
          cone.tracked_curves.push_back(tc);
          known.emplace_back(tc.label, tc.cls);
        }
      }
      if (cone_node.contains("generators")) {
        const Json& gens = cone_node.at("generators");
        if (!gens.is_array()) parse_error(cone_where, "generators must be an array");
        for (const auto& g : gens) {
          cone.psef_generators.push_back(
              divisor_class(g, cone_where + ".generators", known, r));
        }
      } else {
        // Without explicit generators the tracked curves span the psef cone.
        for (const auto& c : cone.tracked_curves) cone.psef_generators.push_back(c.cls);
      }
    } else if (mode == "quadric") {
      allow_keys(cone_node, cone_where, {"mode", "polarization"});
      cone.mode = ConeOracle::Mode::kQuadric;
      cone.polarization =
          divisor_class(require(cone_node, "polarization", cone_where), cone_where, known, r);
    } else {
      parse_error(cone_where, "mode must be \"curves\" or \"quadric\"");
    }

    DivisorClass ample = divisor_class(require(node, "ample", where), where + ".ample", known, r);
    try {
      return SurfaceLattice(labels, gram, cone, ample, field_);
    } catch (const Error& e) {
      parse_error(where, e.what());
    }
  }

  static std::vector<std::pair<std::string, DivisorClass>> names_of(const SurfaceLattice& l) {
    std::vector<std::pair<std::string, DivisorClass>> known;
    for (std::size_t i = 0; i < l.rank(); ++i) {
      known.emplace_back(l.basis_labels()[i], l.basis_vector(i));
    }
    for (const auto& c : l.curves()) known.emplace_back(c.label, c.cls);
    return known;
  }

 private:
  std::int64_t field_;
};

}  // namespace

const SurfaceLattice& Problem::require_lattice() const {
  if (!lattice) throw Error(ErrorCode::kParse, "problem has no lattice section");
  return *lattice;
}

DivisorClass Problem::lookup_class(const std::string& name) const {
  for (const auto& [n, c] : classes) {
    if (n == name) return c;
  }
  const SurfaceLattice& l = require_lattice();
  for (std::size_t i = 0; i < l.rank(); ++i) {
    if (l.basis_labels()[i] == name) return l.basis_vector(i);
  }
  if (auto i = l.find_curve(name)) return l.curves()[*i].cls;
  throw Error(ErrorCode::kParse, "unknown class '" + name + "'");
}

Problem parse_problem(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("malformed JSON: ") + e.what());
  }
  allow_keys(root, "problem", {"sqrt", "lattice", "classes", "sigma", "flag", "curve"});

  Problem problem;
  if (root.contains("sqrt")) {
    const Json& d = root.at("sqrt");
    if (!d.is_number_integer() || d.get<long>() < 2) {
      parse_error("sqrt", "expected an integer >= 2");
    }
    const Scalar root_d = Scalar::sqrt_of(Integer(d.get<long>()));
    if (root_d.is_rational()) parse_error("sqrt", "radicand is a perfect square");
    problem.field = root_d.field();
  }
  const Reader reader(problem.field);

  if (root.contains("lattice")) {
    problem.lattice = reader.lattice(root.at("lattice"), "lattice");
  }

  if (root.contains("classes")) {
    const Json& classes = root.at("classes");
    if (!classes.is_object()) parse_error("classes", "expected an object");
    const SurfaceLattice& l = problem.require_lattice();
    auto known = Reader::names_of(l);
    for (const auto& [name, value] : classes.items()) {
      DivisorClass c = reader.divisor_class(value, "classes." + name, known, l.rank());
      c.label = name;
      problem.classes.emplace_back(name, c);
      known.emplace_back(name, c);
    }
  }

  if (root.contains("sigma")) {
    const Json& sigma = root.at("sigma");
    if (!sigma.is_array()) parse_error("sigma", "expected an array");
    for (const auto& v : sigma) {
      allow_keys(v, "sigma", {"divisor", "t"});
      const std::string divisor = require_string(require(v, "divisor", "sigma"), "sigma");
      const Scalar t = reader.scalar(require(v, "t", "sigma"), "sigma.t");
      try {
        problem.sigma.emplace_back(divisor, t);
      } catch (const Error& e) {
        parse_error("sigma", e.what());
      }
    }
  }

  if (root.contains("flag")) {
    const Json& flag = root.at("flag");
    allow_keys(flag, "flag", {"lattice", "omega_restr", "z_restr", "s_restr"});
    SurfaceLattice s = reader.lattice(require(flag, "lattice", "flag"), "flag.lattice");
    const auto known = Reader::names_of(s);
    DivisorClass omega =
        reader.divisor_class(require(flag, "omega_restr", "flag"), "flag.omega_restr", known, s.rank());
    DivisorClass z =
        reader.divisor_class(require(flag, "z_restr", "flag"), "flag.z_restr", known, s.rank());
    // [S]|_S defaults to omega|_S, the case S numerically equivalent to omega.
    DivisorClass s_restr =
        flag.contains("s_restr")
            ? reader.divisor_class(flag.at("s_restr"), "flag.s_restr", known, s.rank())
            : omega;
    problem.flag = FlagSection{std::move(s), std::move(omega), std::move(z), std::move(s_restr)};
  }

  if (root.contains("curve")) {
    const Json& curve = root.at("curve");
    allow_keys(curve, "curve", {"degree", "points"});
    CurveSection section;
    section.degree = reader.scalar(require(curve, "degree", "curve"), "curve.degree");
    const Json& points = require(curve, "points", "curve");
    if (!points.is_array()) parse_error("curve.points", "expected an array");
    for (const auto& p : points) {
      allow_keys(p, "curve.points", {"label", "t"});
      section.points.push_back(
          {require_string(require(p, "label", "curve.points"), "curve.points"),
           reader.scalar(require(p, "t", "curve.points"), "curve.points.t")});
    }
    problem.curve = std::move(section);
  }
  return problem;
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_problem(buffer.str());
}

}  // namespace zardec
