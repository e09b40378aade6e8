#include "subres/confluent.hpp"

#include <string>

#include "subres/detail/compositions.hpp"
#include "subres/detail/poly_var.hpp"
#include "subres/errors.hpp"

namespace subres {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

void check_root_index(const MultiRootSet& a, std::size_t i) {
  if (i >= a.size())
    throw DomainError("root index " + std::to_string(i) + " out of range (m=" + std::to_string(a.size()) + ")");
}

}  // namespace

ExactMatrix vandermonde_confluent(const MultiRootSet& a, std::size_t u) {
  if (u == 0) throw DomainError("confluent Vandermonde needs u >= 1");
  ExactMatrix v = ExactMatrix::Zero(idx(u), idx(a.degree()));
  std::size_t col = 0;
  for (const auto& [alpha, mult] : a) {
    for (std::size_t j = 0; j < mult; ++j, ++col) {
      Scalar power(1);  // α^{k−j}
      for (std::size_t k = j; k < u; ++k) {
        v(idx(k), idx(col)) = Scalar(binomial(static_cast<long>(k), static_cast<long>(j))) * power;
        power *= alpha;
      }
    }
  }
  return v;
}

Scalar vandermonde_det_closed(const MultiRootSet& a) {
  Scalar out(1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      out *= (a.root(j) - a.root(i)).pow(static_cast<unsigned>(a.multiplicity(i) * a.multiplicity(j)));
  return out;
}

ExactMatrix wronskian(const UniPoly& h, const MultiRootSet& a, std::size_t u) {
  if (u == 0) throw DomainError("Wronskian needs u >= 1");
  ExactMatrix w(idx(u), idx(a.degree()));
  for (std::size_t k = 0; k < u; ++k) {
    const UniPoly row_poly = h.shifted(k);
    std::size_t col = 0;
    for (const auto& [alpha, mult] : a)
      for (std::size_t j = 0; j < mult; ++j, ++col) w(idx(k), idx(col)) = taylor_coeff(row_poly, alpha, j);
  }
  return w;
}

Scalar wronskian_det_closed(const UniPoly& h, const MultiRootSet& a) {
  Scalar out = vandermonde_det_closed(a);
  for (const auto& [alpha, mult] : a) out *= h(alpha).pow(static_cast<unsigned>(mult));
  return out;
}

UniPoly cofactor_poly(const MultiRootSet& a, std::size_t i) {
  check_root_index(a, i);
  UniPoly out = UniPoly::constant(Scalar(1));
  for (std::size_t j = 0; j < a.size(); ++j)
    if (j != i) out = out * UniPoly::linear_root(a.root(j)).pow(static_cast<unsigned>(a.multiplicity(j)));
  return out;
}

UniPoly fiki(const MultiRootSet& a, std::size_t i, std::size_t k) {
  check_root_index(a, i);
  if (k >= a.multiplicity(i))
    throw DomainError("fiki needs k < d_i (k=" + std::to_string(k) + ", d_i=" + std::to_string(a.multiplicity(i)) + ")");
  return UniPoly::linear_root(a.root(i)).pow(static_cast<unsigned>(k)) * cofactor_poly(a, i);
}

UniPoly basic_hermite(const MultiRootSet& a, std::size_t i, std::size_t j) {
  check_root_index(a, i);
  const std::size_t di = a.multiplicity(i);
  if (j >= di) throw DomainError("basic Hermite index j must be < d_i");

  std::vector<std::size_t> others;
  for (std::size_t l = 0; l < a.size(); ++l)
    if (l != i) others.push_back(l);

  const Scalar& alpha = a.root(i);
  const UniPoly fi = cofactor_poly(a, i);
  const UniPoly x_minus_alpha = UniPoly::linear_root(alpha);

  UniPoly sum;
  for (std::size_t k = 0; k + j < di; ++k) {
    Scalar bracket;
    detail::for_each_composition(k, others.size(), [&](const std::vector<std::size_t>& parts) {
      Scalar term(1);
      for (std::size_t p = 0; p < parts.size(); ++p) {
        const std::size_t l = others[p];
        const std::size_t kl = parts[p];
        if (kl == 0) continue;
        term *= Scalar(binomial(static_cast<long>(a.multiplicity(l) - 1 + kl), static_cast<long>(kl)));
        term /= (alpha - a.root(l)).pow(static_cast<unsigned>(kl));
      }
      bracket += term;
    });
    if (bracket.is_zero()) continue;
    if (k % 2 == 1) bracket = -bracket;
    sum += x_minus_alpha.pow(static_cast<unsigned>(j + k)) * fi * bracket;
  }
  return sum / fi(alpha);
}

HermiteData hermite_data_of(const UniPoly& q, const MultiRootSet& a) {
  HermiteData y;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.multiplicity(i); ++j) y[{i, j}] = taylor_coeff(q, a.root(i), j);
  return y;
}

namespace {

void check_data_keys(const MultiRootSet& a, const HermiteData& y) {
  for (const auto& [key, value] : y) {
    if (key.first >= a.size() || key.second >= a.multiplicity(key.first))
      throw DomainError("extra Hermite datum for (" + std::to_string(key.first) + "," + std::to_string(key.second) + ")");
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.multiplicity(i); ++j)
      if (!y.contains({i, j}))
        throw DomainError("missing Hermite datum for (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

}  // namespace

UniPoly hermite_interpolate(const MultiRootSet& a, const HermiteData& y) {
  check_data_keys(a, y);
  for (const auto& r : a)
    if (!r.root.is_rational()) return hermite_interpolate_bordered(a, y);
  UniPoly p;
  for (const auto& [key, value] : y) {
    if (value.is_zero()) continue;
    p += basic_hermite(a, key.first, key.second) * value;
  }
  return p;
}

UniPoly hermite_interpolate_bordered(const MultiRootSet& a, const HermiteData& y) {
  check_data_keys(a, y);
  const std::size_t d = a.degree();
  ExactMatrix bordered = ExactMatrix::Zero(idx(d + 1), idx(d + 1));
  bordered.topLeftCorner(idx(d), idx(d)) = vandermonde_confluent(a, d);
  const Scalar x = Scalar::parameter(detail::kPolyVar);
  Scalar power(1);
  for (std::size_t r = 0; r < d; ++r, power *= x) bordered(idx(r), idx(d)) = power;
  std::size_t col = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.multiplicity(i); ++j) bordered(idx(d), idx(col++)) = y.at({i, j});
  Scalar value = -determinant(bordered);
  value /= vandermonde_det_closed(a);
  return UniPoly::from_scalar(value, detail::kPolyVar);
}

ExactMatrix confluent_inverse(const MultiRootSet& a) {
  const std::size_t d = a.degree();
  ExactMatrix inv = ExactMatrix::Zero(idx(d), idx(d));
  std::size_t row = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.multiplicity(i); ++j, ++row) {
      const UniPoly p = basic_hermite(a, i, j);
      for (std::size_t c = 0; c < d; ++c) inv(idx(row), idx(c)) = p.coeff(c);
    }
  }
  return inv;
}

ExactMatrix vprime(const MultiRootSet& a) {
  const std::size_t d = a.degree();
  ExactMatrix v = ExactMatrix::Zero(idx(d), idx(d));
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t off = a.offset(i);
    const std::size_t di = a.multiplicity(i);
    const UniPoly fi = cofactor_poly(a, i);
    for (std::size_t shift = 0; shift < di; ++shift) {
      const Scalar value = taylor_coeff(fi, a.root(i), shift);
      for (std::size_t r = 0; r + shift < di; ++r) v(idx(off + r), idx(off + r + shift)) = value;
    }
  }
  return v;
}

Scalar vprime_det_closed(const MultiRootSet& a) {
  Scalar out(1);
  for (std::size_t i = 0; i < a.size(); ++i)
    out *= cofactor_poly(a, i)(a.root(i)).pow(static_cast<unsigned>(a.multiplicity(i)));
  return out;
}

}  // namespace subres
