#include <doctest.h>

#include "subres/errors.hpp"
#include "subres/roots.hpp"
#include "subres/unipoly.hpp"
#include "support.hpp"

using namespace subres;

TEST_CASE("polynomials from roots") {
  CHECK(poly_from_roots(MultiRootSet{{Scalar(1), 1}}) == UniPoly({-1, 1}));
  CHECK(poly_from_roots(MultiRootSet{{Scalar(1), 2}}) == UniPoly({1, -2, 1}));
  CHECK(poly_from_roots(MultiRootSet{{Scalar(1), 2}, {Scalar(2), 1}}) == UniPoly({-2, 5, -4, 1}));
}

TEST_CASE("trailing zeros are trimmed and degree is optional") {
  const UniPoly p({1, 2, 0, 0});
  CHECK(p.degree() == 1u);
  CHECK_FALSE(UniPoly({0, 0}).degree().has_value());
  CHECK((p - p).is_zero());
  CHECK((UniPoly({1, 1}) * UniPoly({-1, 1})).degree() == 2u);
}

TEST_CASE("Taylor coefficients") {
  const UniPoly cube = UniPoly::monomial(3);
  CHECK(taylor_coeff(cube, Scalar(1), 1) == Scalar(3));
  const UniPoly sq({1, -2, 1});
  CHECK(taylor_coeff(sq, Scalar(1), 2) == Scalar(1));
  CHECK(taylor_coeff(sq, Scalar(5), 0) == sq(Scalar(5)));

  testing_support::Gen gen(21);
  for (int trial = 0; trial < 50; ++trial) {
    const UniPoly p = gen.poly(static_cast<std::size_t>(gen.integer(0, 6)));
    const Scalar a = gen.rational();
    const auto shifted = testing_support::shifted_coefficients(p, a);
    for (std::size_t j = 0; j < shifted.size() + 2; ++j)
      CHECK(taylor_coeff(p, a, j) == (j < shifted.size() ? shifted[j] : Scalar(0)));
  }
}

TEST_CASE("from_scalar reads a polynomial variable back") {
  const Scalar s = Scalar::parse("3*x^2*c - x + 4");
  const UniPoly p = UniPoly::from_scalar(s, "x");
  CHECK(p == UniPoly({Scalar(4), Scalar(-1), Scalar::parse("3*c")}));
  CHECK(p.to_scalar("x") == s);
}

TEST_CASE("root sets validate their input") {
  CHECK_THROWS_AS(MultiRootSet({{Scalar(1), 1}, {Scalar(1), 2}}), DomainError);
  CHECK_THROWS_AS(MultiRootSet({{Scalar(1), 0}}), DomainError);
  CHECK_THROWS_AS(MultiRootSet(std::vector<RootMultiplicity>{}), DomainError);
  const MultiRootSet a{{Scalar(0), 2}, {Scalar(1), 1}};
  CHECK(a.degree() == 3);
  CHECK(a.offset(1) == 2);
  CHECK_FALSE(a.all_simple());
}

TEST_CASE("pairing") {
  CHECK(pairing(MultiRootSet{{Scalar(1), 1}, {Scalar(2), 1}}, MultiRootSet{{Scalar(3), 1}}) == Scalar(2));
  CHECK(pairing(MultiRootSet{{Scalar(1), 1}}, MultiRootSet{{Scalar(1), 1}, {Scalar(4), 1}}) == Scalar(0));
  CHECK(pairing(MultiRootSet{{Scalar(0), 2}}, MultiRootSet{{Scalar(1), 1}, {Scalar(-1), 1}}) == Scalar(1));
}
