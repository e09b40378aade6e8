#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "subres/matrix.hpp"
#include "subres/multipoly.hpp"

namespace subres {

/// Ordered, duplicate-free list of exponent vectors, always kept in the
/// canonical order (graded lex, x1 > x2 > …).
class MonomialSet {
 public:
  MonomialSet() = default;
  MonomialSet(std::size_t nvars, std::vector<Exponents> monomials);

  [[nodiscard]] std::size_t nvars() const { return nvars_; }
  [[nodiscard]] std::size_t size() const { return monomials_.size(); }
  [[nodiscard]] bool empty() const { return monomials_.empty(); }
  [[nodiscard]] const std::vector<Exponents>& monomials() const { return monomials_; }
  [[nodiscard]] const Exponents& operator[](std::size_t i) const { return monomials_[i]; }
  [[nodiscard]] bool contains(const Exponents& e) const;
  /// Largest total degree present (0 for the empty set).
  [[nodiscard]] unsigned degree_bound() const;

  [[nodiscard]] MonomialSet united(const MonomialSet& other) const;

  auto begin() const { return monomials_.begin(); }
  auto end() const { return monomials_.end(); }
  friend bool operator==(const MonomialSet& a, const MonomialSet& b) = default;

 private:
  std::size_t nvars_ = 0;
  std::vector<Exponents> monomials_;
};

/// f_1..f_{n+1} in n variables with declared degrees D_1..D_{n+1}.
class MVSystem {
 public:
  MVSystem(std::vector<MultiPoly> polynomials, std::vector<unsigned> degrees);

  [[nodiscard]] std::size_t n() const { return polys_.size() - 1; }
  [[nodiscard]] const std::vector<MultiPoly>& polynomials() const { return polys_; }
  [[nodiscard]] const MultiPoly& poly(std::size_t i) const { return polys_[i]; }
  [[nodiscard]] const std::vector<unsigned>& degrees() const { return degrees_; }
  /// D_i-homogeneous components of f_1..f_n.
  [[nodiscard]] std::vector<MultiPoly> leading_forms() const;
  [[nodiscard]] MVSystem substitute(const Scalar::Substitution& values) const;

 private:
  std::vector<MultiPoly> polys_;
  std::vector<unsigned> degrees_;
};

/// #{α : |α| ≤ t, α_i < D_i (i ≤ n), t − |α| < D_{n+1}}; `degrees` holds
/// D_1..D_{n+1}.
std::size_t hilbert_function(const std::vector<unsigned>& degrees, unsigned t);

/// Coefficient of z^j in ∏(1 − z^{D_i}) / (1 − z)^n over the given degrees.
std::size_t tau(const std::vector<unsigned>& degrees, unsigned j);

struct SystemCombinatorics {
  unsigned t = 0;
  std::size_t k = 0;
  unsigned rho = 0;
  std::vector<std::size_t> taus;  // τ_0..τ_ρ
  std::size_t bezout = 0;
  std::size_t s = 0;
  std::size_t r = 0;
};

struct MonomialSets {
  std::vector<MonomialSet> T_by_degree;  // T_0..T_ρ
  MonomialSet T;
  MonomialSet T_star;
  MonomialSet R;
  SystemCombinatorics counts;
};

/// How the unforced T_j (j ≥ t − D_{n+1} + 1) are chosen when no override
/// is given.
enum class TChoice {
  canonical_first,  ///< the first τ_j degree-j monomials in canonical order
  reduced,          ///< {α : |α| = j, α_i < D_i}, same size as τ_j
};

using TOverrides = std::map<unsigned, MonomialSet>;

MonomialSets build_monomial_sets(const std::vector<unsigned>& degrees, unsigned t, const TOverrides& overrides = {},
                                 TChoice choice = TChoice::canonical_first);

/// Columns of the degree-t Macaulay matrix as dehomogenized monomials
/// (|α| ≤ t), canonical order of their homogenizations.
std::vector<Exponents> macaulay_columns(std::size_t n, unsigned t);

/// Macaulay–Chardin matrix of degree t with the columns of S deleted.
ExactMatrix macaulay_matrix(const MVSystem& sys, unsigned t, const MonomialSet& S);

/// Minor on the doubly reducible degree-t monomials; 1 when there are none.
Scalar extraneous_factor(const MVSystem& sys, unsigned t);

/// det(M_S) / E(t).
Scalar delta_s(const MVSystem& sys, unsigned t, const MonomialSet& S);

/// Δ̃_{T_j}(f̃_1, …, f̃_n): the degree-j Macaulay determinant of n forms in n
/// variables with the T_j columns deleted, divided by its own extraneous
/// minor.
Scalar leading_form_subres(const std::vector<MultiPoly>& forms, const std::vector<unsigned>& degrees, unsigned j,
                           const MonomialSet& Tj);

}  // namespace subres
