#pragma once

#include <Eigen/Core>

#include "subres/scalar.hpp"

namespace Eigen {

template <>
struct NumTraits<subres::Scalar> : GenericNumTraits<subres::Scalar> {
  using Real = subres::Scalar;
  using NonInteger = subres::Scalar;
  using Nested = subres::Scalar;
  using Literal = subres::Scalar;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 20,
    MulCost = 40
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace subres {

/// Dense exact matrix.  Row-major so rows can be filled as coefficient
/// vectors, which is how every matrix in this library is described.
using ExactMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Exact determinant.  Rational matrices are reduced by Gaussian
/// elimination over Q; matrices with parameter entries go through
/// fraction-free (Bareiss) elimination so only exact divisions occur.
/// The 0x0 matrix has determinant 1.
Scalar determinant(const ExactMatrix& m);

/// Same as determinant() but always uses the Bareiss kernel.
Scalar determinant_bareiss(ExactMatrix m);

/// Reference Laplace expansion along the first row; exponential cost, only
/// for small matrices and cross-checks.
Scalar determinant_cofactor(const ExactMatrix& m);

/// Rank over Q; entries must be rational.
std::size_t rank(const ExactMatrix& m);

/// Basis of the right kernel over Q in reduced echelon form: one vector per
/// free column, with a 1 in that column.  Entries must be rational.
std::vector<std::vector<Rational>> kernel_basis(const ExactMatrix& m);

ExactMatrix substitute(const ExactMatrix& m, const Scalar::Substitution& values);

bool is_identity(const ExactMatrix& m);

}  // namespace subres
