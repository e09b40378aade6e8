#include "subres/uni_subres.hpp"

#include <string>
#include <vector>

#include "subres/errors.hpp"
#include "subres/matrix.hpp"

namespace subres {

namespace {

void check_degrees(std::size_t d, std::size_t e, std::size_t t) {
  if (d > e) throw DomainError("subresultant needs deg f <= deg g (got d=" + std::to_string(d) + ", e=" + std::to_string(e) + ")");
  if (d == e && t >= d)
    throw DomainError("subresultant needs t < d when d = e (got t=" + std::to_string(t) + ", d=e=" + std::to_string(d) + ")");
  if (t > d) throw DomainError("subresultant needs t <= d (got t=" + std::to_string(t) + ", d=" + std::to_string(d) + ")");
}

Scalar coeff_at(const UniPoly& p, long index) { return index < 0 ? Scalar() : p.coeff(static_cast<std::size_t>(index)); }

}  // namespace

UniPoly sres_coeff(const UniPoly& f, const UniPoly& g, std::size_t t) {
  if (f.is_zero() || g.is_zero()) throw DomainError("subresultant of the zero polynomial");
  const std::size_t d = *f.degree();
  const std::size_t e = *g.degree();
  check_degrees(d, e, t);

  const std::size_t rows = d + e - 2 * t;
  const std::size_t f_rows = e - t;
  const long top_power = static_cast<long>(d + e - t - 1);

  // Scalar block: column j carries the coefficient of x^{top_power − j}.
  ExactMatrix block(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(rows - 1));
  std::vector<UniPoly> last_column;
  last_column.reserve(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    const bool from_f = r < f_rows;
    const UniPoly& p = from_f ? f : g;
    const std::size_t shift = from_f ? (e - t - 1 - r) : (d - t - 1 - (r - f_rows));
    for (std::size_t j = 0; j + 1 < rows; ++j)
      block(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(j)) =
          coeff_at(p, top_power - static_cast<long>(j) - static_cast<long>(shift));
    last_column.push_back(p.shifted(shift));
  }

  // Laplace expansion along the polynomial column.
  UniPoly result;
  for (std::size_t r = 0; r < rows; ++r) {
    ExactMatrix minor(static_cast<Eigen::Index>(rows - 1), static_cast<Eigen::Index>(rows - 1));
    for (std::size_t i = 0, k = 0; i < rows; ++i) {
      if (i == r) continue;
      minor.row(static_cast<Eigen::Index>(k++)) = block.row(static_cast<Eigen::Index>(i));
    }
    Scalar cofactor = determinant(minor);
    if (cofactor.is_zero()) continue;
    if ((r + rows - 1) % 2 == 1) cofactor = -cofactor;
    result += last_column[r] * cofactor;
  }
  return result;
}

Scalar resultant(const UniPoly& f, const UniPoly& g) {
  if (f.is_zero() || g.is_zero() || *f.degree() == 0 || *g.degree() == 0)
    throw DomainError("resultant needs two polynomials of degree >= 1");
  const std::size_t d = *f.degree();
  const std::size_t e = *g.degree();
  if (d > e) {
    Scalar r = resultant(g, f);
    return (d * e) % 2 == 1 ? -r : r;
  }
  return sres_coeff(f, g, 0).coeff(0);
}

namespace {

Scalar cross_pairing(const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
  Scalar out(1);
  for (const auto& a : u)
    for (const auto& b : v) out *= a - b;
  return out;
}

UniPoly root_product(const std::vector<Scalar>& roots) {
  UniPoly out = UniPoly::constant(Scalar(1));
  for (const auto& r : roots) out = out * UniPoly::linear_root(r);
  return out;
}

void split(const MultiRootSet& s, unsigned long mask, std::vector<Scalar>& in, std::vector<Scalar>& out) {
  in.clear();
  out.clear();
  for (std::size_t i = 0; i < s.size(); ++i) ((mask >> i) & 1UL ? in : out).push_back(s.root(i));
}

}  // namespace

UniPoly sylv_double_sum(const MultiRootSet& a, const MultiRootSet& b, std::size_t p, std::size_t q) {
  if (!a.all_simple() || !b.all_simple()) throw DomainError("double sums undefined for multiple roots");
  const std::size_t d = a.size();
  const std::size_t e = b.size();
  if (p > d || q > e) throw DomainError("double sum needs 0 <= p <= d and 0 <= q <= e");
  if (d >= 8 * sizeof(unsigned long) || e >= 8 * sizeof(unsigned long)) throw DomainError("root set too large for subset enumeration");

  UniPoly total;
  std::vector<Scalar> a_in, a_out, b_in, b_out;
  for (unsigned long ma = 0; ma < (1UL << d); ++ma) {
    if (static_cast<std::size_t>(__builtin_popcountl(ma)) != p) continue;
    split(a, ma, a_in, a_out);
    const Scalar a_den = cross_pairing(a_in, a_out);
    const UniPoly a_poly = root_product(a_in);
    for (unsigned long mb = 0; mb < (1UL << e); ++mb) {
      if (static_cast<std::size_t>(__builtin_popcountl(mb)) != q) continue;
      split(b, mb, b_in, b_out);
      Scalar weight = cross_pairing(a_in, b_in) * cross_pairing(a_out, b_out);
      weight /= a_den * cross_pairing(b_in, b_out);
      total += a_poly * root_product(b_in) * weight;
    }
  }
  return total;
}

}  // namespace subres
