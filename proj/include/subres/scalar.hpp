#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace subres {

using Rational = mpq_class;

/// Power product over named parameters, kept sorted by name with no zero
/// exponents.
class ParamMonomial {
 public:
  ParamMonomial() = default;
  static ParamMonomial variable(std::string name, unsigned exponent = 1);

  [[nodiscard]] bool is_one() const { return powers_.empty(); }
  [[nodiscard]] unsigned exponent(std::string_view name) const;
  [[nodiscard]] unsigned total_degree() const;
  [[nodiscard]] const std::vector<std::pair<std::string, unsigned>>& powers() const { return powers_; }

  [[nodiscard]] ParamMonomial operator*(const ParamMonomial& other) const;
  /// True when `other` divides *this; the quotient is written to `out`.
  bool divide(const ParamMonomial& other, ParamMonomial& out) const;
  [[nodiscard]] ParamMonomial without(std::string_view name) const;

  /// Lexicographic order with parameter names sorted alphabetically
  /// ("c0" > "c1" > ... ) — a monomial order, so exact division works.
  friend int compare(const ParamMonomial& a, const ParamMonomial& b);
  friend bool operator==(const ParamMonomial& a, const ParamMonomial& b) = default;

 private:
  std::vector<std::pair<std::string, unsigned>> powers_;
};

struct MonomialGreater {
  bool operator()(const ParamMonomial& a, const ParamMonomial& b) const { return compare(a, b) > 0; }
};

/// Exact scalar: a polynomial in named parameters with rational
/// coefficients.  A plain rational is the constant polynomial, so the same
/// type covers Q and Q[c0, c1, ...] without mixed-domain surprises.
class Scalar {
 public:
  struct Term {
    ParamMonomial monomial;
    Rational coeff;
  };
  using Substitution = std::map<std::string, Scalar>;

  Scalar() = default;
  Scalar(long value);  // NOLINT(google-explicit-constructor)
  Scalar(int value) : Scalar(static_cast<long>(value)) {}  // NOLINT
  Scalar(const Rational& value);  // NOLINT(google-explicit-constructor)
  Scalar(long num, long den);

  static Scalar parameter(const std::string& name);
  /// Parses expressions such as "3/4", "-c0^2*c2 + 1/2*c1", "(x-1)^3".
  static Scalar parse(std::string_view text);

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_one() const;
  [[nodiscard]] bool is_rational() const;
  /// Throws DomainError when the scalar still depends on a parameter.
  [[nodiscard]] Rational rational() const;
  [[nodiscard]] std::set<std::string> parameters() const;
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] std::size_t term_count() const { return terms_.size(); }

  /// Every parameter present must be mapped; a partial map is an error.
  [[nodiscard]] Scalar substitute(const Substitution& values) const;
  /// Ascending coefficients with respect to one parameter.
  [[nodiscard]] std::vector<Scalar> coefficients_in(const std::string& name) const;
  [[nodiscard]] unsigned degree_in(std::string_view name) const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  /// Exact division; throws InexactDivision when no quotient exists.
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  [[nodiscard]] Scalar pow(unsigned exponent) const;
  [[nodiscard]] std::string to_string() const;

 private:
  void add_scaled(const Scalar& other, int sign);
  std::vector<Term> terms_;  // strictly decreasing monomials, nonzero coefficients
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

Rational binomial(long n, long k);
Rational factorial(long n);
std::string to_string(const Rational& q);

}  // namespace subres
