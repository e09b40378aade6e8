#include "subres/duality.hpp"

#include <algorithm>

#include "subres/errors.hpp"

namespace subres {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

std::string exps_to_string(const Exponents& e) {
  std::string out = "(";
  for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + std::to_string(e[i]);
  return out + ")";
}

// Unknowns of the order-N system: |α| ≤ N, degree ascending, canonical
// order within a degree.
std::vector<Exponents> unknowns_up_to(std::size_t n, unsigned order) {
  std::vector<Exponents> out;
  for (unsigned j = 0; j <= order; ++j)
    for (auto& e : monomials_of_degree(n, j)) out.push_back(std::move(e));
  return out;
}

std::vector<Rational> primitive(std::vector<Rational> v) {
  mpz_class den = 1;
  for (const auto& q : v)
    if (q != 0) den = lcm(den, mpz_class(q.get_den()));
  mpz_class g = 0;
  for (auto& q : v) {
    q *= den;
    if (q != 0) g = gcd(g, mpz_class(q.get_num()));
  }
  if (g != 0)
    for (auto& q : v) q /= g;
  return v;
}

}  // namespace

DualFunctional::DualFunctional(Point anchor, Coefficients coeffs) : anchor_(std::move(anchor)) {
  for (auto& [alpha, c] : coeffs) {
    if (alpha.size() != anchor_.size())
      throw DimensionError("functional term " + exps_to_string(alpha) + " does not match the anchor dimension");
    if (!c.is_zero()) coeffs_.emplace(alpha, std::move(c));
  }
  if (coeffs_.empty()) throw DomainError("the zero functional is not representable");
}

DualFunctional DualFunctional::evaluation(Point anchor) {
  Exponents zero(anchor.size(), 0);
  return DualFunctional(std::move(anchor), {{zero, Scalar(1)}});
}

bool DualFunctional::is_evaluation() const {
  return coeffs_.size() == 1 && total_degree(coeffs_.begin()->first) == 0 && coeffs_.begin()->second.is_one();
}

unsigned DualFunctional::order() const {
  unsigned d = 0;
  for (const auto& term : coeffs_) d = std::max(d, total_degree(term.first));
  return d;
}

std::string DualFunctional::to_string() const {
  std::vector<Exponents> keys;
  for (const auto& term : coeffs_) keys.push_back(term.first);
  std::sort(keys.begin(), keys.end(), [](const Exponents& a, const Exponents& b) {
    return total_degree(a) != total_degree(b) ? total_degree(a) < total_degree(b) : a < b;
  });
  std::string out;
  for (const auto& alpha : keys) {
    const Scalar& c = coeffs_.at(alpha);
    const bool constant = total_degree(alpha) == 0;
    std::string coeff = c.to_string();
    if (c.term_count() > 1) coeff = "(" + coeff + ")";
    std::string piece;
    if (constant) {
      piece = coeff;
    } else {
      piece = "d" + exps_to_string(alpha);
      if (c == Scalar(-1)) piece = "-" + piece;
      else if (!c.is_one()) piece = coeff + "*" + piece;
    }
    if (!out.empty() && piece[0] != '-') out += "+";
    out += piece;
  }
  return out;
}

Scalar dual_eval(const DualFunctional& L, const MultiPoly& f) {
  if (f.nvars() != L.nvars()) throw DimensionError("functional and polynomial have different numbers of variables");
  const auto& xi = L.anchor().coords;
  Scalar total;
  for (const auto& [alpha, a] : L.coefficients()) {
    Scalar inner;
    for (const auto& [gamma, c] : f.terms()) {
      Scalar term = c;
      for (std::size_t i = 0; i < alpha.size() && !term.is_zero(); ++i) {
        if (gamma[i] < alpha[i]) {
          term = Scalar();
          break;
        }
        term *= Scalar(binomial(gamma[i], alpha[i]));
        if (gamma[i] > alpha[i]) term *= xi[i].pow(gamma[i] - alpha[i]);
      }
      inner += term;
    }
    total += a * inner;
  }
  return total;
}

std::optional<DualFunctional> sigma_shift(const DualFunctional& L, const Exponents& beta) {
  if (beta.size() != L.nvars()) throw DimensionError("shift exponent does not match the functional's dimension");
  DualFunctional::Coefficients out;
  for (const auto& [alpha, c] : L.coefficients()) {
    Exponents lowered = alpha;
    bool keep = true;
    for (std::size_t i = 0; i < alpha.size() && keep; ++i) {
      keep = alpha[i] >= beta[i];
      if (keep) lowered[i] -= beta[i];
    }
    if (keep) out.emplace(std::move(lowered), c);
  }
  if (out.empty()) return std::nullopt;
  return DualFunctional(L.anchor(), std::move(out));
}

InverseSystem inverse_system(const std::vector<MultiPoly>& generators, const Point& xi,
                             std::optional<std::size_t> order_bound) {
  if (generators.empty()) throw DomainError("inverse_system needs at least one generator");
  const std::size_t n = xi.size();
  std::vector<MultiPoly> local;
  std::size_t default_bound = 1;
  for (const auto& g : generators) {
    if (g.nvars() != n) throw DimensionError("generator and point have different numbers of variables");
    for (const auto& [e, c] : g.terms())
      if (!c.is_rational()) throw DomainError("inverse_system needs rational coefficients");
    for (const auto& c : xi.coords)
      if (!c.is_rational()) throw DomainError("inverse_system needs a rational point");
    if (!g(xi.coords).is_zero()) throw DomainError("the point is not a common root of the generators");
    local.push_back(g.translated(xi.coords));
    default_bound += g.total_degree().value_or(1) - 1;
  }

  InverseSystem result;
  result.order_bound = order_bound.value_or(default_bound);

  auto solve = [&](unsigned order) {
    const auto unknowns = unknowns_up_to(n, order);
    std::map<Exponents, std::size_t> column_of;
    for (std::size_t c = 0; c < unknowns.size(); ++c) column_of.emplace(unknowns[c], c);
    std::vector<std::vector<Scalar>> rows;
    if (order > 0) {
      for (const auto& g : local) {
        for (const auto& beta : unknowns_up_to(n, order - 1)) {
          std::vector<Scalar> row(unknowns.size());
          bool nonzero = false;
          for (const auto& [e, c] : g.terms()) {
            Exponents target = e;
            for (std::size_t i = 0; i < n; ++i) target[i] += beta[i];
            auto it = column_of.find(target);
            if (it == column_of.end()) continue;
            row[it->second] = c;
            nonzero = true;
          }
          if (nonzero) rows.push_back(std::move(row));
        }
      }
    }
    ExactMatrix m = ExactMatrix::Zero(idx(rows.size()), idx(unknowns.size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < unknowns.size(); ++c) m(idx(r), idx(c)) = rows[r][c];
    return std::make_pair(unknowns, kernel_basis(m));
  };

  std::vector<Exponents> unknowns;
  std::vector<std::vector<Rational>> kernel;
  bool stable = false;
  for (unsigned order = 0; order <= result.order_bound; ++order) {
    std::tie(unknowns, kernel) = solve(order);
    result.dims_by_order.push_back(kernel.size());
    const std::size_t count = result.dims_by_order.size();
    if (count >= 2 && result.dims_by_order[count - 1] == result.dims_by_order[count - 2]) {
      stable = true;
      break;
    }
  }
  result.truncated = !stable;

  for (const auto& v : kernel) {
    DualFunctional::Coefficients coeffs;
    const auto p = primitive(v);
    for (std::size_t c = 0; c < unknowns.size(); ++c)
      if (p[c] != 0) coeffs.emplace(unknowns[c], Scalar(p[c]));
    result.basis.emplace_back(xi, std::move(coeffs));
  }
  return result;
}

bool is_sigma_closed(const std::vector<DualFunctional>& basis) {
  if (basis.empty()) return true;
  const std::size_t n = basis.front().nvars();
  std::vector<DualFunctional> shifted;
  for (const auto& L : basis) {
    for (std::size_t i = 0; i < n; ++i) {
      Exponents e(n, 0);
      e[i] = 1;
      if (auto s = sigma_shift(L, e)) shifted.push_back(*s);
    }
  }
  std::vector<DualFunctional> all = basis;
  all.insert(all.end(), shifted.begin(), shifted.end());
  std::map<Exponents, std::size_t> column_of;
  for (const auto& L : all)
    for (const auto& term : L.coefficients()) column_of.emplace(term.first, column_of.size());
  auto to_matrix = [&](std::size_t rows) {
    ExactMatrix m = ExactMatrix::Zero(idx(rows), idx(column_of.size()));
    for (std::size_t r = 0; r < rows; ++r)
      for (const auto& [alpha, c] : all[r].coefficients()) m(idx(r), idx(column_of.at(alpha))) = c;
    return m;
  };
  return rank(to_matrix(basis.size())) == rank(to_matrix(all.size()));
}

DualBasis assemble_dual_basis(const std::vector<std::pair<Point, std::vector<DualFunctional>>>& per_root,
                              std::size_t bezout) {
  DualBasis out;
  for (std::size_t g = 0; g < per_root.size(); ++g) {
    const auto& [point, list] = per_root[g];
    if (list.empty() || !list.front().is_evaluation())
      throw DomainError("functionals of root " + std::to_string(g + 1) + " must start with the evaluation 1");
    for (const auto& L : list) {
      if (!(L.anchor() == point)) throw DomainError("functional anchored away from root " + std::to_string(g + 1));
      out.functionals_.push_back(L);
    }
    out.group_sizes_.push_back(list.size());
  }
  if (out.functionals_.size() != bezout)
    throw DomainError("dual basis has " + std::to_string(out.functionals_.size()) + " functionals, expected " +
                      std::to_string(bezout));
  return out;
}

ExactMatrix dual_wronskian(const MultiPoly& h, const MonomialSet& E, const DualBasis& L) {
  ExactMatrix m(idx(E.size()), idx(L.size()));
  for (std::size_t a = 0; a < E.size(); ++a) {
    const MultiPoly row_poly = h.times_monomial(E[a]);
    for (std::size_t b = 0; b < L.size(); ++b) m(idx(a), idx(b)) = dual_eval(L[b], row_poly);
  }
  return m;
}

ExactMatrix dual_vandermonde(const MonomialSet& E, const DualBasis& L) {
  if (L.size() == 0) return ExactMatrix(idx(E.size()), 0);
  return dual_wronskian(MultiPoly::constant(L[0].nvars(), Scalar(1)), E, L);
}

PoissonTerms poisson_terms(const MVSystem& sys, unsigned t, const MonomialSet& S, const DualBasis& L,
                           const MonomialSets& sets) {
  const std::size_t n = sys.n();
  const auto& counts = sets.counts;
  if (L.size() != counts.bezout)
    throw DomainError("dual basis has " + std::to_string(L.size()) + " functionals, expected " + std::to_string(counts.bezout));
  if (S.size() != counts.k)
    throw DomainError("|S| must equal H(t) = " + std::to_string(counts.k) + " (got " + std::to_string(S.size()) + ")");
  if (counts.t != t) throw DomainError("monomial sets were built for a different t");
  if (counts.k + counts.s + counts.r != counts.bezout)
    throw StructuralError("O_S(Λ) is not square: k+s+r = " + std::to_string(counts.k + counts.s + counts.r) +
                          ", D = " + std::to_string(counts.bezout));

  PoissonTerms out;
  out.det_vt = determinant(dual_vandermonde(sets.T, L));
  if (out.det_vt.is_zero()) throw StructuralError("T is not a basis of the quotient (or Λ is not a basis of the dual)");

  const std::size_t D = counts.bezout;
  ExactMatrix os(idx(D), idx(D));
  os.topRows(idx(counts.k)) = dual_vandermonde(S, L);
  os.middleRows(idx(counts.k), idx(counts.s)) = dual_vandermonde(sets.T_star, L);
  os.bottomRows(idx(counts.r)) = dual_wronskian(sys.poly(n), sets.R, L);
  out.det_os = determinant(os);

  const std::vector<unsigned> first(sys.degrees().begin(), sys.degrees().begin() + static_cast<long>(n));
  const auto forms = sys.leading_forms();
  const unsigned last = sys.degrees()[n];
  out.leading_product = Scalar(1);
  for (unsigned j = t + 1 >= last ? t + 1 - last : 0; j <= t; ++j) {
    const MonomialSet Tj = j < sets.T_by_degree.size() ? sets.T_by_degree[j] : MonomialSet(n, {});
    out.leading_product *= leading_form_subres(forms, first, j, Tj);
  }
  out.value = out.leading_product * out.det_os / out.det_vt;
  return out;
}

Scalar poisson_delta(const MVSystem& sys, unsigned t, const MonomialSet& S, const DualBasis& L,
                     const MonomialSets& sets) {
  return poisson_terms(sys, t, S, L, sets).value;
}

}  // namespace subres
