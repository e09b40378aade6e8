#include "subres/matrix.hpp"

#include <utility>
#include <vector>

#include "subres/errors.hpp"

namespace subres {

namespace {

void require_square(const ExactMatrix& m) {
  if (m.rows() != m.cols())
    throw DimensionError("determinant of a non-square " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + " matrix");
}

bool all_rational(const ExactMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_rational()) return false;
  return true;
}

using RationalRows = std::vector<std::vector<Rational>>;

RationalRows to_rationals(const ExactMatrix& m) {
  RationalRows out(static_cast<std::size_t>(m.rows()), std::vector<Rational>(static_cast<std::size_t>(m.cols())));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).rational();
  return out;
}

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalRows& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    Rational inv = 1 / a[row][col];
    for (std::size_t j = col; j < cols; ++j) a[row][j] *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rational factor = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= factor * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Rational rational_determinant(RationalRows a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rational factor = a[i][k] / a[k][k];
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= factor * a[k][j];
    }
  }
  return det;
}

}  // namespace

Scalar determinant(const ExactMatrix& m) {
  require_square(m);
  if (m.rows() == 0) return Scalar(1);
  if (all_rational(m)) return Scalar(rational_determinant(to_rationals(m)));
  return determinant_bareiss(m);
}

Scalar determinant_bareiss(ExactMatrix m) {
  require_square(m);
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  bool negate = false;
  Scalar previous(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    // Sparsest nonzero pivot keeps intermediate expressions small.
    Eigen::Index p = -1;
    for (Eigen::Index i = k; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      if (p < 0 || m(i, k).term_count() < m(p, k).term_count()) p = i;
    }
    if (p < 0) return Scalar(0);
    if (p != k) {
      m.row(p).swap(m.row(k));
      negate = !negate;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Scalar value = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        value /= previous;
        m(i, j) = std::move(value);
      }
      m(i, k) = Scalar(0);
    }
    previous = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

Scalar determinant_cofactor(const ExactMatrix& m) {
  require_square(m);
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  if (n == 1) return m(0, 0);
  Scalar total;
  for (Eigen::Index j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    ExactMatrix minor(n - 1, n - 1);
    for (Eigen::Index r = 1; r < n; ++r)
      for (Eigen::Index c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    Scalar term = m(0, j) * determinant_cofactor(minor);
    if (j % 2 == 0) total += term;
    else total -= term;
  }
  return total;
}

std::size_t rank(const ExactMatrix& m) {
  RationalRows a = to_rationals(m);
  return rref(a, static_cast<std::size_t>(m.cols())).size();
}

std::vector<std::vector<Rational>> kernel_basis(const ExactMatrix& m) {
  const auto cols = static_cast<std::size_t>(m.cols());
  RationalRows a = to_rationals(m);
  std::vector<std::size_t> pivots = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

ExactMatrix substitute(const ExactMatrix& m, const Scalar::Substitution& values) {
  ExactMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).substitute(values);
  return out;
}

bool is_identity(const ExactMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != Scalar(i == j ? 1 : 0)) return false;
  return true;
}

}  // namespace subres
