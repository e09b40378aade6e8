#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "subres/matrix.hpp"
#include "subres/roots.hpp"
#include "subres/unipoly.hpp"

namespace subres {

// Block and row orders follow the root order of the MultiRootSet, with
// derivative order ascending inside each block.  Root indices are 0-based.

/// u×d confluent Vandermonde matrix: entry (k, block i col j) is
/// binom(k, j)·α_i^{k−j}, zero when k < j.
ExactMatrix vandermonde_confluent(const MultiRootSet& a, std::size_t u);
inline ExactMatrix vandermonde_confluent(const MultiRootSet& a) { return vandermonde_confluent(a, a.degree()); }

/// ∏_{i<j} (α_j − α_i)^{d_i d_j}
Scalar vandermonde_det_closed(const MultiRootSet& a);

/// u×d generalized Wronskian of h(z): entry (k, block i col j) is the j-th
/// Taylor coefficient of z^k·h at α_i.  Coefficients of h may contain other
/// parameters (for h = x − z they contain x).
ExactMatrix wronskian(const UniPoly& h, const MultiRootSet& a, std::size_t u);
inline ExactMatrix wronskian(const UniPoly& h, const MultiRootSet& a) { return wronskian(h, a, a.degree()); }

/// det V(Ā) · ∏ h(α_i)^{d_i}
Scalar wronskian_det_closed(const UniPoly& h, const MultiRootSet& a);

/// f̄_i = ∏_{j≠i} (x − α_j)^{d_j}
UniPoly cofactor_poly(const MultiRootSet& a, std::size_t i);

/// f̄_{i,k} = (x − α_i)^k · f̄_i for 0 ≤ k < d_i.
UniPoly fiki(const MultiRootSet& a, std::size_t i, std::size_t k);

/// Basic Hermite polynomial p_{i,j}: degree < d, p^{(j)}(α_i) = j! and every
/// other derivative condition zero.  Built from the closed composition sum
/// in the f̄_{i,k} basis.
UniPoly basic_hermite(const MultiRootSet& a, std::size_t i, std::size_t j);

/// Hermite data: (root index, derivative order) → normalized value y_{i,j},
/// i.e. the target Taylor coefficient p^{(j)}(α_i)/j!.
using HermiteData = std::map<std::pair<std::size_t, std::size_t>, Scalar>;

/// Taylor data of q on Ā (the inverse of interpolation).
HermiteData hermite_data_of(const UniPoly& q, const MultiRootSet& a);

/// Σ y_{i,j} · p_{i,j}.  The keys must be exactly {(i,j): j < d_i}.  With
/// a symbolic root the bordered form below is used, which divides only once
/// at the end (exact whenever the interpolant is polynomial in the roots).
UniPoly hermite_interpolate(const MultiRootSet& a, const HermiteData& y);

/// Same interpolant through the bordered determinant
/// det V(Ā) · p(x) = −det [ V(Ā) | (1, x, …, x^{d−1})ᵀ ; y | 0 ].
UniPoly hermite_interpolate_bordered(const MultiRootSet& a, const HermiteData& y);

/// V(Ā)^{-1}: row (i, j) holds the monomial coefficients of p_{i,j}.
ExactMatrix confluent_inverse(const MultiRootSet& a);

/// Block-diagonal V′(Ā); block i is upper triangular Toeplitz with
/// entry (r, c) = f̄_i^{(c−r)}(α_i)/(c−r)!.
ExactMatrix vprime(const MultiRootSet& a);

/// ∏_i f̄_i(α_i)^{d_i}
Scalar vprime_det_closed(const MultiRootSet& a);

}  // namespace subres
