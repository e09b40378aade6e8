#include "subres/unipoly.hpp"

#include <algorithm>

#include "subres/errors.hpp"

namespace subres {

UniPoly::UniPoly(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const Scalar& c) { return UniPoly(std::vector<Scalar>{c}); }

UniPoly UniPoly::monomial(std::size_t k, const Scalar& c) {
  std::vector<Scalar> coeffs(k + 1);
  coeffs[k] = c;
  return UniPoly(std::move(coeffs));
}

UniPoly UniPoly::linear_root(const Scalar& a) { return UniPoly({-a, Scalar(1)}); }

UniPoly UniPoly::from_scalar(const Scalar& s, const std::string& var) { return UniPoly(s.coefficients_in(var)); }

std::optional<std::size_t> UniPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

const Scalar& UniPoly::coeff(std::size_t i) const {
  static const Scalar zero;
  return i < coeffs_.size() ? coeffs_[i] : zero;
}

const Scalar& UniPoly::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Scalar UniPoly::operator()(const Scalar& at) const {
  Scalar acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Scalar UniPoly::to_scalar(const std::string& var) const {
  Scalar x = Scalar::parameter(var);
  return (*this)(x);
}

UniPoly UniPoly::substitute(const Scalar::Substitution& values) const {
  std::vector<Scalar> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.substitute(values));
  return UniPoly(std::move(out));
}

UniPoly UniPoly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Scalar> out(k);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return UniPoly(std::move(out));
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly result = constant(Scalar(1));
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

UniPoly& UniPoly::operator+=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Scalar& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

UniPoly& UniPoly::operator/=(const Scalar& c) {
  for (auto& x : coeffs_) x /= c;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string UniPoly::to_string(const std::string& var) const { return to_scalar(var).to_string(); }

Scalar taylor_coeff(const UniPoly& p, const Scalar& a, std::size_t j) {
  // sum_c p_c · binom(c, j) · a^{c−j}, Horner in a.
  Scalar acc;
  const auto& cs = p.coeffs();
  for (std::size_t c = cs.size(); c-- > j;) {
    acc = acc * a + cs[c] * Scalar(binomial(static_cast<long>(c), static_cast<long>(j)));
  }
  return acc;
}

}  // namespace subres
