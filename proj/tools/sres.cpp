#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sres_io.hpp"
#include "subres/confluent.hpp"
#include "subres/errors.hpp"
#include "subres/roots_formulas.hpp"
#include "subres/uni_subres.hpp"

using namespace subres;
using sres_io::json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitStructural = 3;
constexpr int kExitDisagree = 4;

struct Check {
  std::string name;
  bool ok;
  std::string detail;
};

json report(const std::vector<Check>& checks) {
  json list = json::array();
  bool all = true;
  for (const auto& c : checks) {
    json item = {{"name", c.name}, {"ok", c.ok}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    list.push_back(std::move(item));
    all = all && c.ok;
  }
  return {{"checks", list}, {"all_ok", all}};
}

std::vector<Check> verify_univariate(const MultiRootSet& a, const MultiRootSet& b) {
  std::vector<Check> checks;
  const std::size_t d = a.degree();
  const std::size_t e = b.degree();
  const UniPoly f = poly_from_roots(a);
  const UniPoly g = poly_from_roots(b);
  if (d > e) throw DomainError("verify needs deg f <= deg g (swap A and B)");
  const std::size_t t_max = d < e ? d : d - 1;
  for (std::size_t t = 0; t <= t_max; ++t) {
    const UniPoly expected = sres_coeff(f, g, t);
    for (auto v : {RootsVariant::compact, RootsVariant::block, RootsVariant::wronskian_full})
      checks.push_back({"roots/" + std::string(to_string(v)) + "/t=" + std::to_string(t), sres_roots(a, b, t, v) == expected, ""});
    if (a.all_simple() && b.all_simple()) {
      for (std::size_t p = 0; p <= t; ++p) {
        const std::size_t q = t - p;
        if (p > a.size() || q > b.size()) continue;
        UniPoly rhs = expected * Scalar(binomial(static_cast<long>(t), static_cast<long>(p)));
        if ((p * (d - t)) % 2 == 1) rhs = rhs * Scalar(-1);
        checks.push_back({"dsum/p=" + std::to_string(p) + "/q=" + std::to_string(q), sylv_double_sum(a, b, p, q) == rhs, ""});
      }
    }
  }
  checks.push_back({"hermite/t=d-1", sres_dm1_hermite(a, b) == sres_coeff(f, g, d - 1), ""});
  if (d >= 2 && !a.shares_root_with(b)) checks.push_back({"one/t=1", sres_one(a, b) == sres_coeff(f, g, 1), ""});
  checks.push_back({"resultant/pairing", resultant(f, g) == pairing(a, b), ""});
  return checks;
}

std::vector<Check> verify_system(const sres_io::SystemDocument& doc) {
  std::vector<Check> checks;
  const MVSystem& sys = doc.system;
  const std::size_t n = sys.n();
  if (doc.roots.empty()) throw DomainError("verify needs the roots of f_1..f_n in the system document");
  const std::vector<unsigned>& degrees = sys.degrees();
  std::size_t bezout = 1;
  unsigned rho = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bezout *= degrees[i];
    rho += degrees[i] - 1;
  }
  const DualBasis L = assemble_dual_basis(doc.roots, bezout);
  for (std::size_t b = 0; b < L.size(); ++b) {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i) ok = ok && dual_eval(L[b], sys.poly(i)).is_zero();
    checks.push_back({"annihilates/" + std::to_string(b), ok, L[b].to_string()});
  }

  std::vector<unsigned> ts;
  if (doc.t) ts.push_back(*doc.t);
  else
    for (unsigned t = 0; t < rho + degrees[n]; ++t) ts.push_back(t);
  for (unsigned t : ts) {
    const MonomialSets sets = build_monomial_sets(degrees, t, doc.T_override);
    MonomialSet S;
    if (doc.S && doc.t) {
      S = *doc.S;
    } else {
      auto cols = macaulay_columns(n, t);
      S = MonomialSet(n, std::vector<Exponents>(cols.end() - static_cast<long>(sets.counts.k), cols.end()));
    }
    const std::string tag = "/t=" + std::to_string(t);
    checks.push_back({"bezout" + tag, sets.T.size() == bezout, ""});
    const ExactMatrix m = macaulay_matrix(sys, t, S);
    checks.push_back({"square" + tag, m.rows() == m.cols(), ""});
    const Scalar lhs = determinant(m);
    const Scalar rhs = extraneous_factor(sys, t) * poisson_delta(sys, t, S, L, sets);
    checks.push_back({"macaulay-vs-poisson" + tag, lhs == rhs || lhs == -rhs, lhs.to_string() + " vs " + rhs.to_string()});
  }
  return checks;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subresultants in roots: exact computations"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1);

  std::string f_arg, g_arg, a_arg, b_arg, h_arg, system_arg, s_arg, gens_arg, point_arg, input_arg, variant_arg = "compact";
  std::size_t t = 0, p = 0, q = 0, u = 0;
  std::optional<std::size_t> t_opt, order_bound;
  bool detail = false;

  auto* coeffs = app.add_subcommand("coeffs", "Sres_t(f, g) from coefficient arrays");
  coeffs->add_option("--f", f_arg, "ascending coefficients of f")->required();
  coeffs->add_option("--g", g_arg, "ascending coefficients of g")->required();
  coeffs->add_option("-t", t, "subresultant index")->required();

  auto* roots = app.add_subcommand("roots", "Sres_t(f, g) from the roots");
  roots->add_option("--A", a_arg, "roots of f as [[root, multiplicity], ...]")->required();
  roots->add_option("--B", b_arg, "roots of g")->required();
  roots->add_option("-t", t, "subresultant index")->required();
  roots->add_option("--variant", variant_arg, "compact, block or wronskian-full");

  auto* hermite = app.add_subcommand("hermite", "Sres_{d-1} as a Hermite interpolant");
  hermite->add_option("--A", a_arg, "roots of f as [[root, multiplicity], ...]")->required();
  hermite->add_option("--B", b_arg, "roots of g")->required();

  auto* one = app.add_subcommand("one", "Sres_1 from the closed form");
  one->add_option("--A", a_arg, "roots of f as [[root, multiplicity], ...]")->required();
  one->add_option("--B", b_arg, "roots of g")->required();

  auto* dsum = app.add_subcommand("dsum", "Sylvester double sum Sylv^{p,q}(A, B; x)");
  dsum->add_option("--A", a_arg, "roots of f as [[root, multiplicity], ...]")->required();
  dsum->add_option("--B", b_arg, "roots of g")->required();
  dsum->add_option("-p", p, "number of roots taken from A")->required();
  dsum->add_option("-q", q, "number of roots taken from B")->required();

  auto* vandermonde = app.add_subcommand("vandermonde", "confluent Vandermonde matrix V_u(A), or W_{h,u}(A) with --h");
  vandermonde->add_option("--A", a_arg, "root set as [[root, multiplicity], ...]")->required();
  vandermonde->add_option("-u", u, "number of rows (default d)");
  vandermonde->add_option("--h", h_arg, "ascending coefficients of h");

  auto* wronskian_cmd = app.add_subcommand("wronskian", "generalized Wronskian W_{h,u}(A)");
  wronskian_cmd->add_option("--A", a_arg, "root set as [[root, multiplicity], ...]")->required();
  wronskian_cmd->add_option("-u", u, "number of rows (default d)");
  wronskian_cmd->add_option("--h", h_arg, "ascending coefficients of h")->required();

  auto* mv = app.add_subcommand("mv", "multivariate subresultant Delta_S from a system document");
  mv->add_option("--system", system_arg, "system document (inline or @file)")->required();
  mv->add_option("-t", t_opt, "degree t (overrides the document)");
  mv->add_option("--S", s_arg, "monomial set S (overrides the document)");
  mv->add_flag("--detail", detail, "print E(t), det(M_S) and the Poisson side as well");

  auto* dual = app.add_subcommand("dual", "local inverse system at a root");
  dual->add_option("--generators", gens_arg, "list of polynomials")->required();
  dual->add_option("--point", point_arg, "the root")->required();
  dual->add_option("--order-bound", order_bound, "largest order explored");

  auto* verify = app.add_subcommand("verify", "cross-check battery on one input");
  verify->add_option("--input", input_arg, "{A, B} or a system document with roots")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    json out;
    int status = 0;
    auto rootset = [](const std::string& s) { return sres_io::roots_from(sres_io::read_document(s)); };
    const auto default_u = [&](const MultiRootSet& a) { return u == 0 ? a.degree() : u; };

    if (*coeffs) {
      out = sres_io::to_json(sres_coeff(sres_io::unipoly_from(sres_io::read_document(f_arg)),
                                        sres_io::unipoly_from(sres_io::read_document(g_arg)), t));
    } else if (*roots) {
      out = sres_io::to_json(sres_roots(rootset(a_arg), rootset(b_arg), t, parse_variant(variant_arg)));
    } else if (*hermite) {
      out = sres_io::to_json(sres_dm1_hermite(rootset(a_arg), rootset(b_arg)));
    } else if (*one) {
      out = sres_io::to_json(sres_one(rootset(a_arg), rootset(b_arg)));
    } else if (*dsum) {
      out = sres_io::to_json(sylv_double_sum(rootset(a_arg), rootset(b_arg), p, q));
    } else if (*vandermonde || *wronskian_cmd) {
      const MultiRootSet a = rootset(a_arg);
      const ExactMatrix m = h_arg.empty() ? vandermonde_confluent(a, default_u(a))
                                          : wronskian(sres_io::unipoly_from(sres_io::read_document(h_arg)), a, default_u(a));
      out = {{"matrix", sres_io::to_json(m)}};
      if (m.rows() == m.cols()) out["determinant"] = sres_io::to_json(determinant(m));
    } else if (*mv) {
      sres_io::SystemDocument doc = sres_io::system_from(sres_io::read_document(system_arg));
      if (t_opt) doc.t = static_cast<unsigned>(*t_opt);
      if (!s_arg.empty()) doc.S = sres_io::monomial_set_from(sres_io::read_document(s_arg), doc.system.n());
      if (!doc.t) throw DomainError("no degree t given (document field 't' or flag -t)");
      const MonomialSet S = doc.S ? *doc.S : MonomialSet(doc.system.n(), {});
      const Scalar value = delta_s(doc.system, *doc.t, S);
      if (!detail) {
        out = sres_io::to_json(value);
      } else {
        out = {{"delta_s", sres_io::to_json(value)},
               {"extraneous", sres_io::to_json(extraneous_factor(doc.system, *doc.t))},
               {"det_M", sres_io::to_json(determinant(macaulay_matrix(doc.system, *doc.t, S)))}};
        if (!doc.roots.empty()) {
          std::size_t bezout = 1;
          for (std::size_t i = 0; i < doc.system.n(); ++i) bezout *= doc.system.degrees()[i];
          const auto sets = build_monomial_sets(doc.system.degrees(), *doc.t, doc.T_override);
          const auto terms = poisson_terms(doc.system, *doc.t, S, assemble_dual_basis(doc.roots, bezout), sets);
          out["poisson"] = {{"value", sres_io::to_json(terms.value)},
                            {"leading_product", sres_io::to_json(terms.leading_product)},
                            {"det_O_S", sres_io::to_json(terms.det_os)},
                            {"det_V_T", sres_io::to_json(terms.det_vt)}};
        }
      }
    } else if (*dual) {
      const Point xi = sres_io::point_from(sres_io::read_document(point_arg));
      const json gens = sres_io::read_document(gens_arg);
      std::vector<MultiPoly> generators;
      for (const auto& g : gens) generators.push_back(sres_io::multipoly_from(g, xi.size()));
      const InverseSystem inv = inverse_system(generators, xi, order_bound);
      json basis = json::array();
      for (const auto& L : inv.basis) basis.push_back(sres_io::to_json(L));
      out = {{"dimension", inv.basis.size()},
             {"truncated", inv.truncated},
             {"dims_by_order", inv.dims_by_order},
             {"basis", basis}};
    } else if (*verify) {
      const json doc = sres_io::read_document(input_arg);
      std::vector<Check> checks;
      if (doc.contains("A")) checks = verify_univariate(sres_io::roots_from(doc.at("A")), sres_io::roots_from(doc.at("B")));
      else checks = verify_system(sres_io::system_from(doc));
      out = report(checks);
      if (!out["all_ok"].get<bool>()) status = kExitDisagree;
    }
    std::cout << out.dump() << "\n";
    return status;
  } catch (const StructuralError& e) {
    std::cerr << "structural error: " << e.what() << "\n";
    return kExitStructural;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  }
}
