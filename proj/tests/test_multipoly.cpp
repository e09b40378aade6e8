#include <doctest.h>

#include "subres/errors.hpp"
#include "subres/multipoly.hpp"

using namespace subres;

TEST_CASE("canonical monomial order") {
  CHECK(monomials_of_degree(2, 2) == std::vector<Exponents>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(monomials_of_degree(3, 1) == std::vector<Exponents>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  CHECK(monomials_of_degree(3, 0) == std::vector<Exponents>{{0, 0, 0}});
  CHECK(canonical_before({2, 0}, {0, 1}));
  CHECK(canonical_before({1, 0, 1}, {0, 2, 0}));
  CHECK_FALSE(canonical_before({0, 1}, {0, 1}));
  for (unsigned j = 0; j <= 4; ++j) {
    const auto ms = monomials_of_degree(3, j);
    CHECK(ms.size() == static_cast<std::size_t>((j + 1) * (j + 2) / 2));
    for (std::size_t i = 1; i < ms.size(); ++i) CHECK(canonical_before(ms[i - 1], ms[i]));
  }
}

TEST_CASE("parsing separates variables from parameters") {
  const MultiPoly f = MultiPoly::parse("c0 + c1*x1 + c2*x2", 2);
  CHECK(f.total_degree() == 1u);
  CHECK(f.coeff({0, 0}) == Scalar::parameter("c0"));
  CHECK(f.coeff({0, 1}) == Scalar::parameter("c2"));
  CHECK(f.coeff({1, 1}).is_zero());

  const MultiPoly g = MultiPoly::parse("x1^2 + (x2-1)^2 - 1", 2);
  CHECK(g == MultiPoly::parse("x1^2 + x2^2 - 2*x2", 2));
  CHECK_THROWS_AS(MultiPoly::parse("x3", 2), ParseError);
}

TEST_CASE("arithmetic and evaluation") {
  const MultiPoly x = MultiPoly::variable(2, 0), y = MultiPoly::variable(2, 1);
  const MultiPoly p = (x + y) * (x - y);
  CHECK(p == MultiPoly::parse("x1^2 - x2^2", 2));
  CHECK(p.is_homogeneous());
  CHECK((p - p).is_zero());
  CHECK(p.total_degree() == 2u);
  CHECK_FALSE(MultiPoly(2).total_degree().has_value());
  CHECK(p({Scalar(3), Scalar(1)}) == Scalar(8));
  CHECK(p.times_monomial({0, 2}) == MultiPoly::parse("x1^2*x2^2 - x2^4", 2));
  CHECK(MultiPoly::parse("x1^2 + 3*x1*x2 + x1 + 1", 2).homogeneous_part(2) == MultiPoly::parse("x1^2 + 3*x1*x2", 2));
  CHECK_THROWS_AS(x + MultiPoly::variable(3, 0), DomainError);
}

TEST_CASE("translation to local coordinates") {
  const MultiPoly f = MultiPoly::parse("x1^2 + (x2-1)^2 - 1", 2);
  const MultiPoly local = f.translated({Scalar(0), Scalar(2)});
  CHECK(local == MultiPoly::parse("x1^2 + x2^2 + 2*x2", 2));
  const MultiPoly g = MultiPoly::parse("3*x1^3*x2 - x2 + 5", 2);
  const std::vector<Scalar> xi{Scalar(1, 2), Scalar(-2)};
  const MultiPoly shifted = g.translated(xi);
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b)
      CHECK(shifted({Scalar(a), Scalar(b)}) == g({Scalar(a) + xi[0], Scalar(b) + xi[1]}));
}

TEST_CASE("parameter substitution") {
  const MultiPoly f = MultiPoly::parse("c0 + c1*x1 + c2*x2", 2);
  CHECK(f.substitute({{"c0", Scalar(1)}, {"c1", Scalar(1)}, {"c2", Scalar(1)}}) == MultiPoly::parse("1 + x1 + x2", 2));
}
