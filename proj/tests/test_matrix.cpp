#include <doctest.h>

#include "subres/confluent.hpp"
#include "subres/errors.hpp"
#include "subres/matrix.hpp"
#include "support.hpp"

using namespace subres;
using testing_support::Gen;

TEST_CASE("small determinants") {
  CHECK(determinant(ExactMatrix::Identity(3, 3)) == Scalar(1));
  ExactMatrix m(2, 2);
  m << Scalar(1), Scalar(2), Scalar(3), Scalar(4);
  CHECK(determinant(m) == Scalar(-2));
  CHECK(determinant(ExactMatrix(0, 0)) == Scalar(1));
  CHECK_THROWS_AS(determinant(ExactMatrix(2, 3)), DimensionError);
}

TEST_CASE("5x5 confluent Vandermonde against cofactor expansion") {
  const MultiRootSet a{{Scalar(2), 3}, {Scalar(5), 2}};
  const ExactMatrix v = vandermonde_confluent(a);
  CHECK(determinant_cofactor(v) == Scalar(729));
  CHECK(determinant(v) == Scalar(729));
}

TEST_CASE("Gaussian, Bareiss and cofactor agree on random rational matrices") {
  Gen gen(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(1, 6));
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = gen.integer(0, 3) == 0 ? Scalar(0) : gen.rational();
    const Scalar reference = determinant_cofactor(m);
    CHECK(determinant(m) == reference);
    CHECK(determinant_bareiss(m) == reference);
  }
}

TEST_CASE("Bareiss on parameter entries agrees with cofactor expansion") {
  Gen gen(8);
  const Scalar a = Scalar::parameter("a");
  const Scalar b = Scalar::parameter("b");
  for (int trial = 0; trial < 25; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen.integer(2, 5));
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) = Scalar(gen.integer(-2, 2)) + Scalar(gen.integer(-1, 1)) * a + Scalar(gen.integer(-1, 1)) * b * a;
    CHECK(determinant(m) == determinant_cofactor(m));
  }
}

TEST_CASE("determinant is alternating and multilinear") {
  Gen gen(9);
  for (int trial = 0; trial < 30; ++trial) {
    ExactMatrix m = gen.matrix(4);
    ExactMatrix swapped = m;
    swapped.row(0).swap(swapped.row(2));
    CHECK(determinant(swapped) == -determinant(m));
    ExactMatrix scaled = m;
    scaled.row(1) *= Scalar(3, 2);
    CHECK(determinant(scaled) == determinant(m) * Scalar(3, 2));
  }
}

TEST_CASE("rank and kernel") {
  ExactMatrix m(2, 3);
  m << Scalar(1), Scalar(2), Scalar(3), Scalar(2), Scalar(4), Scalar(6);
  CHECK(rank(m) == 1);
  const auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 2);
  for (const auto& v : ker) CHECK(v[0] + 2 * v[1] + 3 * v[2] == 0);
  CHECK(ker[0][1] == 1);
  CHECK(ker[1][2] == 1);
}

TEST_CASE("substitution into a matrix") {
  ExactMatrix m(1, 2);
  m << Scalar::parameter("e"), Scalar::parse("e^2 + 1");
  const ExactMatrix s = substitute(m, {{"e", Scalar(2)}});
  CHECK(s(0, 0) == Scalar(2));
  CHECK(s(0, 1) == Scalar(5));
  CHECK(is_identity(ExactMatrix::Identity(2, 2)));
  CHECK_FALSE(is_identity(s));
}
