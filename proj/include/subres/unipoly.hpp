#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "subres/scalar.hpp"

namespace subres {

/// Dense univariate polynomial with Scalar coefficients, ascending order.
/// Trailing zeros are never stored; the zero polynomial has no degree.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Scalar> coeffs);
  UniPoly(std::initializer_list<Scalar> coeffs) : UniPoly(std::vector<Scalar>(coeffs)) {}

  static UniPoly constant(const Scalar& c);
  /// c·x^k
  static UniPoly monomial(std::size_t k, const Scalar& c = Scalar(1));
  /// x − a
  static UniPoly linear_root(const Scalar& a);
  /// Reads the polynomial in `var` off a Scalar that may contain it.
  static UniPoly from_scalar(const Scalar& s, const std::string& var);

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// nullopt for the zero polynomial.
  [[nodiscard]] std::optional<std::size_t> degree() const;
  [[nodiscard]] const Scalar& coeff(std::size_t i) const;
  [[nodiscard]] const std::vector<Scalar>& coeffs() const { return coeffs_; }
  [[nodiscard]] const Scalar& leading() const;

  [[nodiscard]] Scalar operator()(const Scalar& at) const;
  [[nodiscard]] Scalar to_scalar(const std::string& var) const;
  [[nodiscard]] UniPoly substitute(const Scalar::Substitution& values) const;
  [[nodiscard]] UniPoly shifted(std::size_t k) const;  // x^k · p
  [[nodiscard]] UniPoly pow(unsigned e) const;

  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  UniPoly& operator*=(const Scalar& c);
  /// Exact coefficientwise division by a scalar.
  UniPoly& operator/=(const Scalar& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Scalar& c) { return a *= c; }
  friend UniPoly operator*(const Scalar& c, UniPoly a) { return a *= c; }
  friend UniPoly operator/(UniPoly a, const Scalar& c) { return a /= c; }
  UniPoly operator-() const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  [[nodiscard]] std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

/// p^{(j)}(a)/j!, the coefficient of (x−a)^j in the Taylor expansion at a.
Scalar taylor_coeff(const UniPoly& p, const Scalar& a, std::size_t j);

}  // namespace subres
