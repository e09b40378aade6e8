#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "subres/matrix.hpp"
#include "subres/roots.hpp"
#include "subres/unipoly.hpp"

namespace testing_support {

using subres::ExactMatrix;
using subres::MultiRootSet;
using subres::RootMultiplicity;
using subres::Scalar;
using subres::UniPoly;

inline Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

/// Deterministic source of small rationals and root sets.
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Scalar rational() {
    static const int dens[] = {1, 1, 1, 2, 3};
    return Scalar(integer(-6, 6), dens[integer(0, 4)]);
  }

  /// Distinct rational roots with multiplicities ≤ max_mult and total
  /// degree exactly `degree`.  `avoid` roots are never used.
  MultiRootSet roots(std::size_t degree, std::size_t max_mult, const std::vector<Scalar>& avoid = {}) {
    std::vector<RootMultiplicity> entries;
    std::vector<Scalar> used = avoid;
    std::size_t left = degree;
    while (left > 0) {
      Scalar r = rational();
      if (std::find(used.begin(), used.end(), r) != used.end()) continue;
      used.push_back(r);
      const std::size_t m = std::min<std::size_t>(left, static_cast<std::size_t>(integer(1, static_cast<int>(max_mult))));
      entries.push_back({r, m});
      left -= m;
    }
    return MultiRootSet(std::move(entries));
  }

  UniPoly poly(std::size_t degree) {
    std::vector<Scalar> c;
    for (std::size_t i = 0; i <= degree; ++i) c.push_back(Scalar(integer(-5, 5)));
    if (c.back().is_zero()) c.back() = Scalar(1);
    return UniPoly(c);
  }

  ExactMatrix matrix(std::size_t n, int range = 4) {
    ExactMatrix m(idx(n), idx(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(idx(i), idx(j)) = Scalar(integer(-range, range));
    return m;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
};

/// Coefficients of p(x + a), by repeated synthetic division.
inline std::vector<Scalar> shifted_coefficients(const UniPoly& p, const Scalar& a) {
  std::vector<Scalar> c = p.coeffs();
  std::vector<Scalar> out;
  while (!c.empty()) {
    // divide c by (x − a): remainder is the next Taylor coefficient
    std::vector<Scalar> q(c.size() - 1);
    Scalar carry;
    for (std::size_t k = c.size(); k-- > 0;) {
      carry = c[k] + carry * a;
      if (k > 0) q[k - 1] = carry;
    }
    out.push_back(carry);
    c = std::move(q);
  }
  return out;
}

/// Coefficient j of Sres_t(f, g) as the minor of the Sylvester-type matrix
/// built from the highest d+e−2t−1 columns plus column x^j.
inline Scalar sres_minor(const UniPoly& f, const UniPoly& g, std::size_t t, std::size_t j) {
  const std::size_t d = *f.degree();
  const std::size_t e = *g.degree();
  const std::size_t rows = d + e - 2 * t;
  ExactMatrix m = ExactMatrix::Zero(idx(rows), idx(rows));
  auto fill = [&](std::size_t row, const UniPoly& p, std::size_t shift) {
    for (std::size_t c = 0; c + 1 < rows; ++c) {
      const std::size_t power = d + e - t - 1 - c;
      if (power >= shift && power - shift < p.coeffs().size()) m(idx(row), idx(c)) = p.coeff(power - shift);
    }
    if (j >= shift && j - shift < p.coeffs().size()) m(idx(row), idx(rows - 1)) = p.coeff(j - shift);
  };
  std::size_t r = 0;
  for (std::size_t s = e - t; s-- > 0;) fill(r++, f, s);
  for (std::size_t s = d - t; s-- > 0;) fill(r++, g, s);
  return subres::determinant_bareiss(m);
}

inline UniPoly sres_by_minors(const UniPoly& f, const UniPoly& g, std::size_t t) {
  std::vector<Scalar> c;
  for (std::size_t j = 0; j <= t; ++j) c.push_back(sres_minor(f, g, t, j));
  return UniPoly(c);
}

}  // namespace testing_support
