#pragma once

#include <cstddef>

#include "subres/roots.hpp"
#include "subres/unipoly.hpp"

namespace subres {

/// Order-t subresultant of f (degree d) and g (degree e) from the
/// (d+e−2t)-row determinant whose last column holds x^{e−t−1}f, …, f,
/// x^{d−t−1}g, …, g.  Requires 0 ≤ t ≤ d < e or 0 ≤ t < d = e.
UniPoly sres_coeff(const UniPoly& f, const UniPoly& g, std::size_t t);

/// Res(f, g).  Either argument order is accepted; when deg f > deg g the
/// pair is swapped with the sign (−1)^{de}.
Scalar resultant(const UniPoly& f, const UniPoly& g);

/// Sylvester's double sum Sylv^{p,q}(A, B; x) for simple-root sets.
UniPoly sylv_double_sum(const MultiRootSet& a, const MultiRootSet& b, std::size_t p, std::size_t q);

}  // namespace subres
