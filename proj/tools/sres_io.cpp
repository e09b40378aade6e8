#include "sres_io.hpp"

#include <fstream>
#include <sstream>

#include "subres/errors.hpp"

namespace sres_io {

using subres::ParseError;
using subres::Scalar;

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
  return j.at(name);
}

void expect_array(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be a JSON array, got " + j.dump());
}

}  // namespace

json read_document(const std::string& value) {
  std::string text = value;
  if (!value.empty() && value[0] == '@') {
    std::ifstream in(value.substr(1));
    if (!in) throw ParseError("cannot open " + value.substr(1));
    std::stringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

json to_json(const Scalar& s) {
  if (s.is_rational()) {
    const subres::Rational q = s.rational();
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return json(q.get_num().get_si());
    return json(subres::to_string(q));
  }
  return json(s.to_string());
}

json to_json(const subres::UniPoly& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

json to_json(const subres::ExactMatrix& m) {
  json out = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

json exponents_json(const subres::Exponents& e) {
  json out = json::array();
  for (unsigned v : e) out.push_back(v);
  return out;
}

json to_json(const subres::MultiPoly& p) {
  json out = json::array();
  std::vector<subres::Exponents> keys;
  for (const auto& term : p.terms()) keys.push_back(term.first);
  std::sort(keys.begin(), keys.end(), subres::canonical_before);
  for (const auto& e : keys) out.push_back({{"exponents", exponents_json(e)}, {"coeff", to_json(p.coeff(e))}});
  return out;
}

json to_json(const subres::MultiRootSet& a) {
  json out = json::array();
  for (const auto& r : a) out.push_back({to_json(r.root), r.multiplicity});
  return out;
}

json to_json(const subres::DualFunctional& L) {
  json terms = json::array();
  std::vector<subres::Exponents> keys;
  for (const auto& term : L.coefficients()) keys.push_back(term.first);
  std::sort(keys.begin(), keys.end(), [](const subres::Exponents& a, const subres::Exponents& b) {
    return subres::canonical_before(b, a);
  });
  for (const auto& e : keys) terms.push_back({{"exponents", exponents_json(e)}, {"coeff", to_json(L.coefficients().at(e))}});
  return terms;
}

Scalar scalar_from(const json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_number_float()) throw ParseError("floating-point literal " + j.dump() + "; write rationals as strings like \"3/4\"");
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  throw ParseError("expected a scalar, got " + j.dump());
}

subres::UniPoly unipoly_from(const json& j) {
  expect_array(j, "polynomial");
  std::vector<Scalar> coeffs;
  for (const auto& c : j) coeffs.push_back(scalar_from(c));
  return subres::UniPoly(std::move(coeffs));
}

subres::MultiRootSet roots_from(const json& j) {
  expect_array(j, "root set");
  std::vector<subres::RootMultiplicity> entries;
  for (const auto& item : j) {
    if (item.is_array()) {
      if (item.size() != 2 || !item[1].is_number_unsigned())
        throw ParseError("root entry must be [root, multiplicity], got " + item.dump());
      entries.push_back({scalar_from(item[0]), item[1].get<std::size_t>()});
    } else {
      entries.push_back({scalar_from(item), 1});
    }
  }
  return subres::MultiRootSet(std::move(entries));
}

subres::Exponents exponents_from(const json& j) {
  expect_array(j, "exponent vector");
  subres::Exponents e;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) throw ParseError("exponents must be non-negative integers, got " + j.dump());
    e.push_back(v.get<unsigned>());
  }
  return e;
}

subres::MonomialSet monomial_set_from(const json& j, std::size_t nvars) {
  expect_array(j, "monomial set");
  std::vector<subres::Exponents> mons;
  for (const auto& e : j) mons.push_back(exponents_from(e));
  return subres::MonomialSet(nvars, std::move(mons));
}

subres::MultiPoly multipoly_from(const json& j, std::size_t nvars) {
  if (j.is_string()) return subres::MultiPoly::parse(j.get<std::string>(), nvars);
  expect_array(j, "polynomial");
  subres::MultiPoly p(nvars);
  for (const auto& record : j) p += subres::MultiPoly::monomial(exponents_from(field(record, "exponents")), scalar_from(field(record, "coeff")));
  return p;
}

subres::Point point_from(const json& j) {
  expect_array(j, "point");
  subres::Point p;
  for (const auto& c : j) p.coords.push_back(scalar_from(c));
  return p;
}

subres::DualFunctional functional_from(const json& j, const subres::Point& anchor) {
  expect_array(j, "functional");
  subres::DualFunctional::Coefficients coeffs;
  for (const auto& record : j) {
    auto e = exponents_from(field(record, "exponents"));
    auto [it, inserted] = coeffs.emplace(e, scalar_from(field(record, "coeff")));
    if (!inserted) throw ParseError("repeated exponent vector in functional " + j.dump());
  }
  return subres::DualFunctional(anchor, std::move(coeffs));
}

SystemDocument system_from(const json& j) {
  const json& nj = field(j, "n");
  if (!nj.is_number_unsigned()) throw ParseError("'n' must be a positive integer");
  const std::size_t n = nj.get<std::size_t>();

  const json& polys = field(j, "polynomials");
  expect_array(polys, "polynomials");
  std::vector<subres::MultiPoly> fs;
  for (const auto& p : polys) fs.push_back(multipoly_from(p, n));

  std::vector<unsigned> degrees;
  if (j.contains("degrees")) {
    for (const auto& d : j.at("degrees")) {
      if (!d.is_number_unsigned()) throw ParseError("degrees must be positive integers");
      degrees.push_back(d.get<unsigned>());
    }
  } else {
    for (const auto& f : fs) degrees.push_back(f.total_degree().value_or(0));
  }

  SystemDocument doc{subres::MVSystem(std::move(fs), std::move(degrees)), {}, {}, {}, {}};
  if (j.contains("t")) doc.t = j.at("t").get<unsigned>();
  if (j.contains("S")) doc.S = monomial_set_from(j.at("S"), n);
  if (j.contains("T_override")) {
    for (const auto& [key, mons] : j.at("T_override").items()) doc.T_override.emplace(std::stoul(key), monomial_set_from(mons, n));
  }
  if (j.contains("roots")) {
    std::vector<subres::MultiPoly> generators(doc.system.polynomials().begin(), doc.system.polynomials().end() - 1);
    for (const auto& root : j.at("roots")) {
      subres::Point p = point_from(field(root, "point"));
      if (p.size() != n) throw ParseError("root " + root.dump() + " does not have n coordinates");
      std::vector<subres::DualFunctional> dual;
      if (!root.contains("dual")) {
        dual.push_back(subres::DualFunctional::evaluation(p));
      } else if (root.at("dual").is_string() && root.at("dual").get<std::string>() == "auto") {
        dual = subres::inverse_system(generators, p).basis;
      } else {
        expect_array(root.at("dual"), "dual");
        for (const auto& f : root.at("dual")) dual.push_back(functional_from(f, p));
      }
      doc.roots.emplace_back(std::move(p), std::move(dual));
    }
  }
  return doc;
}

json to_json(const SystemDocument& doc) {
  const auto& sys = doc.system;
  json out;
  out["n"] = sys.n();
  json vars = json::array();
  for (std::size_t i = 1; i <= sys.n(); ++i) vars.push_back("x" + std::to_string(i));
  out["variables"] = vars;
  out["polynomials"] = json::array();
  for (const auto& f : sys.polynomials()) out["polynomials"].push_back(to_json(f));
  out["degrees"] = sys.degrees();
  if (doc.t) out["t"] = *doc.t;
  if (doc.S) {
    out["S"] = json::array();
    for (const auto& e : *doc.S) out["S"].push_back(exponents_json(e));
  }
  if (!doc.T_override.empty()) {
    json over = json::object();
    for (const auto& [j, set] : doc.T_override) {
      json mons = json::array();
      for (const auto& e : set) mons.push_back(exponents_json(e));
      over[std::to_string(j)] = mons;
    }
    out["T_override"] = over;
  }
  if (!doc.roots.empty()) {
    out["roots"] = json::array();
    for (const auto& [p, dual] : doc.roots) {
      json point = json::array();
      for (const auto& c : p.coords) point.push_back(to_json(c));
      json functionals = json::array();
      for (const auto& L : dual) functionals.push_back(to_json(L));
      out["roots"].push_back({{"point", point}, {"dual", functionals}});
    }
  }
  return out;
}

}  // namespace sres_io
