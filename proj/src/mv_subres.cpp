#include "subres/mv_subres.hpp"

#include <algorithm>
#include <string>

#include "subres/errors.hpp"

namespace subres {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

std::string exps_to_string(const Exponents& e) {
  std::string out = "(";
  for (std::size_t i = 0; i < e.size(); ++i) out += (i ? "," : "") + std::to_string(e[i]);
  return out + ")";
}

// Degree-j Macaulay layout for N homogeneous forms in N variables.
struct Layout {
  std::vector<Exponents> columns;
  std::vector<Exponents> row_monomials;  // β + D_i e_i, one per row
  ExactMatrix full;
};

Layout build_layout(const std::vector<MultiPoly>& forms, const std::vector<unsigned>& degrees, unsigned j) {
  const std::size_t nv = forms.size();
  Layout layout;
  layout.columns = monomials_of_degree(nv, j);
  std::map<Exponents, std::size_t> column_of;
  for (std::size_t c = 0; c < layout.columns.size(); ++c) column_of.emplace(layout.columns[c], c);

  std::vector<std::pair<std::size_t, Exponents>> rows;
  for (std::size_t i = 0; i < nv; ++i) {
    if (j < degrees[i]) continue;
    for (const auto& beta : monomials_of_degree(nv, j - degrees[i])) {
      bool keep = true;
      for (std::size_t l = 0; l < i && keep; ++l) keep = beta[l] < degrees[l];
      if (!keep) continue;
      Exponents gamma = beta;
      gamma[i] += degrees[i];
      layout.row_monomials.push_back(std::move(gamma));
      rows.emplace_back(i, beta);
    }
  }

  layout.full = ExactMatrix::Zero(idx(rows.size()), idx(layout.columns.size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& [i, beta] = rows[r];
    for (const auto& [e, c] : forms[i].terms()) {
      Exponents target = e;
      for (std::size_t l = 0; l < nv; ++l) target[l] += beta[l];
      layout.full(idx(r), idx(column_of.at(target))) = c;
    }
  }
  return layout;
}

bool doubly_reducible(const Exponents& gamma, const std::vector<unsigned>& degrees) {
  std::size_t hits = 0;
  for (std::size_t l = 0; l < gamma.size(); ++l)
    if (gamma[l] >= degrees[l]) ++hits;
  return hits >= 2;
}

Scalar extraneous_minor(const Layout& layout, const std::vector<unsigned>& degrees) {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  for (std::size_t r = 0; r < layout.row_monomials.size(); ++r)
    if (doubly_reducible(layout.row_monomials[r], degrees)) rows.push_back(r);
  for (std::size_t c = 0; c < layout.columns.size(); ++c)
    if (doubly_reducible(layout.columns[c], degrees)) cols.push_back(c);
  if (rows.size() != cols.size())
    throw StructuralError("extraneous submatrix is " + std::to_string(rows.size()) + "x" + std::to_string(cols.size()));
  ExactMatrix sub(idx(rows.size()), idx(cols.size()));
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = 0; b < cols.size(); ++b) sub(idx(a), idx(b)) = layout.full(idx(rows[a]), idx(cols[b]));
  return determinant(sub);
}

ExactMatrix delete_columns(const Layout& layout, const std::vector<Exponents>& removed) {
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < layout.columns.size(); ++c)
    if (std::find(removed.begin(), removed.end(), layout.columns[c]) == removed.end()) keep.push_back(c);
  if (keep.size() != layout.row_monomials.size())
    throw StructuralError("Macaulay matrix is not square: " + std::to_string(layout.row_monomials.size()) + " rows, " +
                          std::to_string(keep.size()) + " columns");
  ExactMatrix out(layout.full.rows(), idx(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c) out.col(idx(c)) = layout.full.col(idx(keep[c]));
  return out;
}

MultiPoly homogenize(const MultiPoly& f, unsigned degree) {
  MultiPoly::Terms terms;
  for (const auto& [e, c] : f.terms()) {
    Exponents h = e;
    h.push_back(degree - total_degree(e));
    terms.emplace(std::move(h), c);
  }
  return MultiPoly(f.nvars() + 1, std::move(terms));
}

Layout system_layout(const MVSystem& sys, unsigned t) {
  std::vector<MultiPoly> forms;
  for (std::size_t i = 0; i <= sys.n(); ++i) forms.push_back(homogenize(sys.poly(i), sys.degrees()[i]));
  return build_layout(forms, sys.degrees(), t);
}

Exponents homogenized(const Exponents& alpha, unsigned t) {
  Exponents h = alpha;
  h.push_back(t - total_degree(alpha));
  return h;
}

void check_s(const MVSystem& sys, unsigned t, const MonomialSet& S) {
  const std::size_t k = hilbert_function(sys.degrees(), t);
  if (S.size() != k)
    throw DomainError("|S| must equal H(t) = " + std::to_string(k) + " (got " + std::to_string(S.size()) + ")");
  if (!S.empty() && S.nvars() != sys.n()) throw DimensionError("S monomials do not have n exponents");
  for (const auto& alpha : S)
    if (total_degree(alpha) > t) throw DomainError("monomial " + exps_to_string(alpha) + " in S has degree above t");
}

const char* kCannyMessage =
    "extraneous factor vanishes; the paper's perturbation à la Canny is out of scope; perturb inputs manually";

}  // namespace

MonomialSet::MonomialSet(std::size_t nvars, std::vector<Exponents> monomials)
    : nvars_(nvars), monomials_(std::move(monomials)) {
  for (const auto& e : monomials_)
    if (e.size() != nvars_) throw DimensionError("monomial " + exps_to_string(e) + " does not have " + std::to_string(nvars_) + " exponents");
  std::sort(monomials_.begin(), monomials_.end(), canonical_before);
  if (std::adjacent_find(monomials_.begin(), monomials_.end()) != monomials_.end())
    throw DomainError("duplicate monomial in set");
}

bool MonomialSet::contains(const Exponents& e) const {
  return std::binary_search(monomials_.begin(), monomials_.end(), e, canonical_before);
}

unsigned MonomialSet::degree_bound() const {
  unsigned d = 0;
  for (const auto& e : monomials_) d = std::max(d, total_degree(e));
  return d;
}

MonomialSet MonomialSet::united(const MonomialSet& other) const {
  if (empty()) return other;
  if (other.empty()) return *this;
  std::vector<Exponents> all = monomials_;
  all.insert(all.end(), other.monomials_.begin(), other.monomials_.end());
  return MonomialSet(nvars_, std::move(all));
}

MVSystem::MVSystem(std::vector<MultiPoly> polynomials, std::vector<unsigned> degrees)
    : polys_(std::move(polynomials)), degrees_(std::move(degrees)) {
  if (polys_.size() < 2) throw DomainError("a system needs n+1 polynomials with n >= 1");
  if (degrees_.size() != polys_.size())
    throw DimensionError("expected " + std::to_string(polys_.size()) + " declared degrees, got " + std::to_string(degrees_.size()));
  for (std::size_t i = 0; i < polys_.size(); ++i) {
    if (polys_[i].nvars() != n())
      throw DimensionError("f" + std::to_string(i + 1) + " is not a polynomial in " + std::to_string(n()) + " variables");
    if (degrees_[i] == 0) throw DomainError("declared degrees must be at least 1");
    const auto deg = polys_[i].total_degree();
    if (deg && *deg > degrees_[i])
      throw DomainError("f" + std::to_string(i + 1) + " has degree " + std::to_string(*deg) + " above the declared " +
                        std::to_string(degrees_[i]));
  }
}

std::vector<MultiPoly> MVSystem::leading_forms() const {
  std::vector<MultiPoly> out;
  for (std::size_t i = 0; i < n(); ++i) out.push_back(polys_[i].homogeneous_part(degrees_[i]));
  return out;
}

MVSystem MVSystem::substitute(const Scalar::Substitution& values) const {
  std::vector<MultiPoly> out;
  for (const auto& p : polys_) out.push_back(p.substitute(values));
  return MVSystem(std::move(out), degrees_);
}

std::size_t hilbert_function(const std::vector<unsigned>& degrees, unsigned t) {
  if (degrees.size() < 2) throw DomainError("hilbert_function needs D_1..D_{n+1} with n >= 1");
  const std::size_t n = degrees.size() - 1;
  std::size_t count = 0;
  for (unsigned j = 0; j <= t; ++j) {
    if (t - j >= degrees[n]) continue;
    for (const auto& alpha : monomials_of_degree(n, j)) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) ok = alpha[i] < degrees[i];
      if (ok) ++count;
    }
  }
  return count;
}

std::size_t tau(const std::vector<unsigned>& degrees, unsigned j) {
  // ∏ (1 + z + … + z^{D_i−1}), truncated at z^j.
  std::vector<long> series(j + 1, 0);
  series[0] = 1;
  for (unsigned d : degrees) {
    if (d == 0) throw DomainError("degrees must be at least 1");
    std::vector<long> next(j + 1, 0);
    for (unsigned a = 0; a <= j; ++a)
      for (unsigned b = 0; b < d && a + b <= j; ++b) next[a + b] += series[a];
    series = std::move(next);
  }
  return static_cast<std::size_t>(series[j]);
}

MonomialSets build_monomial_sets(const std::vector<unsigned>& degrees, unsigned t, const TOverrides& overrides,
                                 TChoice choice) {
  if (degrees.size() < 2) throw DomainError("build_monomial_sets needs D_1..D_{n+1} with n >= 1");
  const std::size_t n = degrees.size() - 1;
  const std::vector<unsigned> first(degrees.begin(), degrees.begin() + static_cast<long>(n));
  const unsigned last = degrees[n];

  MonomialSets out;
  SystemCombinatorics& c = out.counts;
  c.t = t;
  c.k = hilbert_function(degrees, t);
  c.rho = 0;
  c.bezout = 1;
  for (unsigned d : first) {
    c.rho += d - 1;
    c.bezout *= d;
  }
  const unsigned free_from = t + 1 >= last ? t + 1 - last : 0;

  auto reduced = [&](unsigned j) {
    std::vector<Exponents> mons;
    for (const auto& alpha : monomials_of_degree(n, j)) {
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i) ok = alpha[i] < first[i];
      if (ok) mons.push_back(alpha);
    }
    return mons;
  };

  for (const auto& [j, set] : overrides) {
    if (j < free_from) throw DomainError("T_" + std::to_string(j) + " is forced for this t and cannot be overridden");
    if (j > c.rho) throw DomainError("T_" + std::to_string(j) + " is beyond rho = " + std::to_string(c.rho));
  }

  for (unsigned j = 0; j <= c.rho; ++j) {
    const std::size_t tj = tau(first, j);
    c.taus.push_back(tj);
    std::vector<Exponents> mons;
    if (j < free_from) {
      mons = reduced(j);
    } else if (auto it = overrides.find(j); it != overrides.end()) {
      const MonomialSet& given = it->second;
      if (given.size() != tj)
        throw DomainError("T_" + std::to_string(j) + " needs " + std::to_string(tj) + " monomials, got " + std::to_string(given.size()));
      if (!given.empty() && given.nvars() != n) throw DimensionError("T_" + std::to_string(j) + " monomials do not have n exponents");
      for (const auto& alpha : given)
        if (total_degree(alpha) != j) throw DomainError("T_" + std::to_string(j) + " contains " + exps_to_string(alpha) + " of the wrong degree");
      mons = given.monomials();
    } else if (choice == TChoice::reduced) {
      mons = reduced(j);
    } else {
      auto all = monomials_of_degree(n, j);
      if (all.size() < tj) throw StructuralError("tau_" + std::to_string(j) + " exceeds the number of degree-j monomials");
      mons.assign(all.begin(), all.begin() + static_cast<long>(tj));
    }
    if (mons.size() != tj) throw StructuralError("T_" + std::to_string(j) + " does not have tau_j elements");
    out.T_by_degree.emplace_back(n, std::move(mons));
  }

  out.T = MonomialSet(n, {});
  out.T_star = MonomialSet(n, {});
  for (unsigned j = 0; j <= c.rho; ++j) {
    out.T = out.T.united(out.T_by_degree[j]);
    if (j > t) out.T_star = out.T_star.united(out.T_by_degree[j]);
  }

  std::vector<Exponents> r;
  for (unsigned j = 0; j <= t; ++j) {
    if (t - j < last) continue;
    for (auto& alpha : reduced(j)) r.push_back(std::move(alpha));
  }
  out.R = MonomialSet(n, std::move(r));
  c.s = out.T_star.size();
  c.r = out.R.size();
  if (out.T.size() != c.bezout) throw StructuralError("|T| differs from the Bezout number");
  return out;
}

std::vector<Exponents> macaulay_columns(std::size_t n, unsigned t) {
  std::vector<Exponents> out;
  for (auto& h : monomials_of_degree(n + 1, t)) {
    h.pop_back();
    out.push_back(std::move(h));
  }
  return out;
}

ExactMatrix macaulay_matrix(const MVSystem& sys, unsigned t, const MonomialSet& S) {
  check_s(sys, t, S);
  const Layout layout = system_layout(sys, t);
  std::vector<Exponents> removed;
  for (const auto& alpha : S) removed.push_back(homogenized(alpha, t));
  return delete_columns(layout, removed);
}

Scalar extraneous_factor(const MVSystem& sys, unsigned t) {
  return extraneous_minor(system_layout(sys, t), sys.degrees());
}

Scalar delta_s(const MVSystem& sys, unsigned t, const MonomialSet& S) {
  const Scalar e = extraneous_factor(sys, t);
  if (e.is_zero()) throw DomainError(kCannyMessage);
  return determinant(macaulay_matrix(sys, t, S)) / e;
}

Scalar leading_form_subres(const std::vector<MultiPoly>& forms, const std::vector<unsigned>& degrees, unsigned j,
                           const MonomialSet& Tj) {
  const std::size_t n = forms.size();
  if (n == 0 || degrees.size() != n) throw DimensionError("leading_form_subres needs n forms with n degrees");
  for (std::size_t i = 0; i < n; ++i) {
    if (forms[i].nvars() != n) throw DimensionError("forms must be polynomials in n variables");
    if (!forms[i].is_homogeneous() || (!forms[i].is_zero() && forms[i].total_degree() != degrees[i]))
      throw DomainError("form " + std::to_string(i + 1) + " is not homogeneous of degree " + std::to_string(degrees[i]));
  }
  const std::size_t tj = tau(degrees, j);
  if (Tj.size() != tj)
    throw DomainError("T_j needs tau_j = " + std::to_string(tj) + " monomials, got " + std::to_string(Tj.size()));
  for (const auto& alpha : Tj)
    if (alpha.size() != n || total_degree(alpha) != j)
      throw DomainError("T_j contains " + exps_to_string(alpha) + ", not a degree-j monomial");

  const Layout layout = build_layout(forms, degrees, j);
  const ExactMatrix m = delete_columns(layout, Tj.monomials());
  const Scalar e = extraneous_minor(layout, degrees);
  if (e.is_zero()) throw DomainError(kCannyMessage);
  return determinant(m) / e;
}

}  // namespace subres
