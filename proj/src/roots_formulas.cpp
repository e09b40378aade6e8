#include "subres/roots_formulas.hpp"

#include <string>
#include <vector>

#include "subres/confluent.hpp"
#include "subres/detail/compositions.hpp"
#include "subres/detail/poly_var.hpp"
#include "subres/errors.hpp"
#include "subres/matrix.hpp"

namespace subres {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

void check_degrees(std::size_t d, std::size_t e, std::size_t t) {
  if (d > e) throw DomainError("roots formulas need d <= e (got d=" + std::to_string(d) + ", e=" + std::to_string(e) + ")");
  if (d == e && t >= d)
    throw DomainError("roots formulas need t < d when d = e (got t=" + std::to_string(t) + ")");
  if (t > d) throw DomainError("roots formulas need t <= d (got t=" + std::to_string(t) + ", d=" + std::to_string(d) + ")");
}

Scalar sign(std::size_t exponent) { return Scalar(exponent % 2 == 0 ? 1 : -1); }

// det / (closed-form Vandermonde determinants), read back as a polynomial in x.
UniPoly finish(const ExactMatrix& m, const Scalar& sign_factor, const Scalar& divisor) {
  Scalar value = determinant(m) * sign_factor;
  value /= divisor;
  return UniPoly::from_scalar(value, detail::kPolyVar);
}

UniPoly compact(const MultiRootSet& a, const MultiRootSet& b, std::size_t t) {
  const std::size_t d = a.degree();
  const Scalar x = Scalar::parameter(detail::kPolyVar);
  ExactMatrix m = ExactMatrix::Zero(idx(d + 1), idx(d + 1));
  m.topLeftCorner(idx(t + 1), idx(d)) = vandermonde_confluent(a, t + 1);
  Scalar power(1);
  for (std::size_t r = 0; r <= t; ++r, power *= x) m(idx(r), idx(d)) = power;
  if (d > t) m.bottomLeftCorner(idx(d - t), idx(d)) = wronskian(poly_from_roots(b), a, d - t);
  return finish(m, sign(d - t), vandermonde_det_closed(a));
}

UniPoly block(const MultiRootSet& a, const MultiRootSet& b, std::size_t t) {
  const std::size_t d = a.degree();
  const std::size_t e = b.degree();
  const std::size_t n = d + e + 1;
  const Scalar x = Scalar::parameter(detail::kPolyVar);
  ExactMatrix m = ExactMatrix::Zero(idx(n), idx(n));
  m.topLeftCorner(idx(t + 1), idx(d)) = vandermonde_confluent(a, t + 1);
  Scalar power(1);
  for (std::size_t r = 0; r <= t; ++r, power *= x) m(idx(r), idx(d + e)) = power;
  const std::size_t lower = d + e - t;
  m.block(idx(t + 1), 0, idx(lower), idx(d)) = vandermonde_confluent(a, lower);
  m.block(idx(t + 1), idx(d), idx(lower), idx(e)) = vandermonde_confluent(b, lower);
  const std::size_t c = std::max(e % 2, (d - t) % 2);
  return finish(m, sign(c), vandermonde_det_closed(a) * vandermonde_det_closed(b));
}

UniPoly wronskian_full(const MultiRootSet& a, const MultiRootSet& b, std::size_t t) {
  const std::size_t d = a.degree();
  const std::size_t e = b.degree();
  const Scalar x = Scalar::parameter(detail::kPolyVar);
  ExactMatrix m = ExactMatrix::Zero(idx(d + e), idx(d + e));
  if (t > 0) m.topLeftCorner(idx(t), idx(d)) = wronskian(UniPoly({x, Scalar(-1)}), a, t);
  const std::size_t lower = d + e - t;
  m.block(idx(t), 0, idx(lower), idx(d)) = vandermonde_confluent(a, lower);
  m.block(idx(t), idx(d), idx(lower), idx(e)) = vandermonde_confluent(b, lower);
  return finish(m, sign((d - t) * e), vandermonde_det_closed(a) * vandermonde_det_closed(b));
}

}  // namespace

RootsVariant parse_variant(std::string_view name) {
  if (name == "compact") return RootsVariant::compact;
  if (name == "block") return RootsVariant::block;
  if (name == "wronskian-full") return RootsVariant::wronskian_full;
  throw DomainError("unknown variant '" + std::string(name) + "' (expected compact, block or wronskian-full)");
}

std::string_view to_string(RootsVariant v) {
  switch (v) {
    case RootsVariant::compact: return "compact";
    case RootsVariant::block: return "block";
    case RootsVariant::wronskian_full: return "wronskian-full";
  }
  return "?";
}

UniPoly sres_roots(const MultiRootSet& a, const MultiRootSet& b, std::size_t t, RootsVariant variant) {
  check_degrees(a.degree(), b.degree(), t);
  switch (variant) {
    case RootsVariant::compact: return compact(a, b, t);
    case RootsVariant::block: return block(a, b, t);
    case RootsVariant::wronskian_full: return wronskian_full(a, b, t);
  }
  throw DomainError("unknown variant");
}

UniPoly sres_dm1_hermite(const MultiRootSet& a, const MultiRootSet& b) {
  if (a.degree() > b.degree()) throw DomainError("Sres_{d-1} formula needs d - 1 < e");
  return hermite_interpolate(a, hermite_data_of(poly_from_roots(b), a));
}

UniPoly sres_one(const MultiRootSet& a, const MultiRootSet& b) {
  const std::size_t d = a.degree();
  const std::size_t e = b.degree();
  if (d < 2 || d > e) throw DomainError("Sres_1 formula needs 1 < d <= e (got d=" + std::to_string(d) + ", e=" + std::to_string(e) + ")");
  if (a.shares_root_with(b)) throw DomainError("Sres_1 formula has poles when f and g share a root");

  const UniPoly g = poly_from_roots(b);
  std::vector<Scalar> g_at(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) g_at[i] = g(a.root(i));

  // Σ_i N_i(x)/D_i accumulated over a common denominator; each D_i clears
  // the (α_i − ·)^{k} denominators of the composition sums.
  UniPoly numerator;
  Scalar denominator(1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Scalar& alpha = a.root(i);
    const std::size_t di = a.multiplicity(i);

    // Other nodes with their multiplicities: α_j (j ≠ i), then every β_ℓ.
    std::vector<RootMultiplicity> nodes;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (j != i) nodes.push_back(a[j]);
    for (const auto& rb : b) nodes.push_back(rb);

    // cleared(k) = L_i · Σ_{|κ|=k} ∏ binom(mult−1+κ, κ)/(α − node)^κ,  L_i = ∏ (α − node)^{d_i−1}.
    auto cleared = [&](std::size_t k) {
      Scalar total;
      detail::for_each_composition(k, nodes.size(), [&](const std::vector<std::size_t>& parts) {
        Scalar term(1);
        for (std::size_t p = 0; p < parts.size(); ++p) {
          const std::size_t mult = nodes[p].multiplicity;
          term *= Scalar(binomial(static_cast<long>(mult - 1 + parts[p]), static_cast<long>(parts[p])));
          term *= (alpha - nodes[p].root).pow(static_cast<unsigned>(di - 1 - parts[p]));
        }
        total += term;
      });
      return total;
    };
    Scalar clearing(1);
    for (const auto& node : nodes) clearing *= (alpha - node.root).pow(static_cast<unsigned>(di - 1));

    Scalar prefactor = sign(d - di) * g_at[i].pow(static_cast<unsigned>(di - 1));
    for (std::size_t j = 0; j < a.size(); ++j)
      if (j != i) prefactor *= g_at[j].pow(static_cast<unsigned>(a.multiplicity(j)));

    UniPoly bracket = UniPoly::linear_root(alpha) * cleared(di - 1);
    if (std::min<std::size_t>(1, di - 1) == 1) bracket += UniPoly::constant(cleared(di - 2));

    const Scalar den_i = cofactor_poly(a, i)(alpha) * clearing;
    numerator = numerator * den_i + bracket * prefactor * denominator;
    denominator *= den_i;
  }
  return numerator / denominator;
}

UniPoly sres_one_single_root(const Scalar& alpha, std::size_t d, const MultiRootSet& b) {
  if (d < 2 || d > b.degree()) throw DomainError("single-root Sres_1 form needs 2 <= d <= e");
  for (const auto& rb : b)
    if (rb.root == alpha) throw DomainError("Sres_1 formula has poles when f and g share a root");
  // ḡ(α)^{d−1} ∏ (α−β_ℓ)^{−k_ℓ} = ∏ (α−β_ℓ)^{e_ℓ(d−1) − k_ℓ}, always a polynomial.
  auto weighted = [&](std::size_t k) {
    Scalar total;
    detail::for_each_composition(k, b.size(), [&](const std::vector<std::size_t>& parts) {
      Scalar term(1);
      for (std::size_t l = 0; l < parts.size(); ++l) {
        const std::size_t el = b.multiplicity(l);
        term *= Scalar(binomial(static_cast<long>(el - 1 + parts[l]), static_cast<long>(parts[l])));
        term *= (alpha - b.root(l)).pow(static_cast<unsigned>(el * (d - 1) - parts[l]));
      }
      total += term;
    });
    return total;
  };
  return UniPoly::linear_root(alpha) * weighted(d - 1) + UniPoly::constant(weighted(d - 2));
}

UniPoly taylor_truncation(const UniPoly& g, const Scalar& alpha, std::size_t d) {
  UniPoly out;
  const UniPoly x_minus_alpha = UniPoly::linear_root(alpha);
  for (std::size_t j = 0; j < d; ++j) out += x_minus_alpha.pow(static_cast<unsigned>(j)) * taylor_coeff(g, alpha, j);
  return out;
}

}  // namespace subres
