#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subres/scalar.hpp"

namespace subres {

using Exponents = std::vector<unsigned>;

unsigned total_degree(const Exponents& e);

/// Graded lexicographic comparison with x1 > x2 > …; returns true when a
/// comes first in the canonical (descending) order.
bool canonical_before(const Exponents& a, const Exponents& b);

/// All exponent vectors of length n and total degree exactly j, in
/// canonical order (x1^j first).
std::vector<Exponents> monomials_of_degree(std::size_t n, unsigned j);

/// Sparse polynomial in x1..xn with Scalar coefficients.
class MultiPoly {
 public:
  using Terms = std::map<Exponents, Scalar>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}
  MultiPoly(std::size_t nvars, Terms terms);

  static MultiPoly constant(std::size_t nvars, const Scalar& c);
  static MultiPoly variable(std::size_t nvars, std::size_t i);  // 0-based
  static MultiPoly monomial(const Exponents& e, const Scalar& c = Scalar(1));
  /// Parses text over the variables x1..xn; any other identifier is a
  /// coefficient parameter ("c0 + c1*x1 + c2*x2").
  static MultiPoly parse(std::string_view text, std::size_t nvars);

  [[nodiscard]] std::size_t nvars() const { return nvars_; }
  [[nodiscard]] const Terms& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] std::optional<unsigned> total_degree() const;
  [[nodiscard]] const Scalar& coeff(const Exponents& e) const;
  [[nodiscard]] bool is_homogeneous() const;

  [[nodiscard]] MultiPoly homogeneous_part(unsigned degree) const;
  [[nodiscard]] MultiPoly times_monomial(const Exponents& e) const;
  [[nodiscard]] Scalar operator()(const std::vector<Scalar>& point) const;
  [[nodiscard]] MultiPoly substitute(const Scalar::Substitution& values) const;
  /// Coefficients of f in the local coordinates y = x − ξ:
  /// coeff_α = Σ_γ f_γ ∏ binom(γ_i, α_i) ξ_i^{γ_i−α_i}.
  [[nodiscard]] MultiPoly translated(const std::vector<Scalar>& xi) const;

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Scalar& c);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }

  [[nodiscard]] std::string to_string() const;

 private:
  void check_arity(const Exponents& e) const;
  void add_term(const Exponents& e, const Scalar& c);
  std::size_t nvars_ = 0;
  Terms terms_;
};

}  // namespace subres
