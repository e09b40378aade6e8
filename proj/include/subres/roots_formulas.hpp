#pragma once

#include <cstddef>
#include <string_view>

#include "subres/roots.hpp"
#include "subres/unipoly.hpp"

namespace subres {

/// Determinant shapes expressing Sres_t(f̄, ḡ) through the roots.
enum class RootsVariant {
  /// (d+1)-square: V_{t+1}(Ā) bordered by (1, …, x^t), above W_{ḡ,d−t}(Ā).
  compact,
  /// (d+e+1)-square: [V_{t+1}(Ā) 0 | x-powers ; V_{d+e−t}(Ā) V_{d+e−t}(B̄) | 0].
  block,
  /// (d+e)-square: [W_{x−z,t}(Ā) 0 ; V_{d+e−t}(Ā) V_{d+e−t}(B̄)].
  wronskian_full,
};

RootsVariant parse_variant(std::string_view name);
std::string_view to_string(RootsVariant v);

/// Sres_t(f̄, ḡ) from the roots of f̄ = ∏(x−α_i)^{d_i} and ḡ = ∏(x−β_j)^{e_j}.
/// Requires 0 ≤ t ≤ d < e or 0 ≤ t < d = e.  Every variant returns exactly
/// the coefficient-side subresultant, sign included.
UniPoly sres_roots(const MultiRootSet& a, const MultiRootSet& b, std::size_t t, RootsVariant variant);

/// Sres_{d−1}(f̄, ḡ) as the Hermite interpolant of ḡ on Ā.  Requires d ≤ e.
UniPoly sres_dm1_hermite(const MultiRootSet& a, const MultiRootSet& b);

/// Sres_1(f̄, ḡ) from the double composition-sum closed form.  Requires
/// 1 < d ≤ e and no root shared between Ā and B̄.
UniPoly sres_one(const MultiRootSet& a, const MultiRootSet& b);

/// The single-root closed form for Sres_1((x−α)^d, ḡ), d ≥ 2, written with
/// every denominator cleared against ḡ(α)^{d−1}, so it stays polynomial for
/// symbolic α and β.
UniPoly sres_one_single_root(const Scalar& alpha, std::size_t d, const MultiRootSet& b);

/// Σ_j ḡ^{(j)}(α)/j! (x−α)^j for j < d: Sres_{d−1}((x−α)^d, ḡ).
UniPoly taylor_truncation(const UniPoly& g, const Scalar& alpha, std::size_t d);

}  // namespace subres
