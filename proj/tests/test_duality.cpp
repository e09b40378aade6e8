#include <doctest.h>

#include "mv_support.hpp"
#include "subres/duality.hpp"
#include "subres/errors.hpp"

using namespace subres;

namespace {

const Point kOrigin{{Scalar(0), Scalar(0)}};
const Point kTop{{Scalar(0), Scalar(2)}};

MVSystem paper_system() {
  return MVSystem({MultiPoly::parse("x1*x2", 2), MultiPoly::parse("x1^2 + (x2-1)^2 - 1", 2),
                   MultiPoly::parse("c0 + c1*x1 + c2*x2", 2)},
                  {2, 2, 1});
}

DualFunctional third() { return DualFunctional(kOrigin, {{{0, 1}, Scalar(1)}, {{2, 0}, Scalar(2)}}); }
DualFunctional d10() { return DualFunctional(kOrigin, {{{1, 0}, Scalar(1)}}); }

DualBasis paper_duals() {
  return assemble_dual_basis({{kOrigin, {DualFunctional::evaluation(kOrigin), d10(), third()}},
                              {kTop, {DualFunctional::evaluation(kTop)}}},
                             4);
}

}  // namespace

TEST_CASE("functional evaluation") {
  CHECK(dual_eval(third(), MultiPoly::parse("x1^2 + (x2-1)^2 - 1", 2)).is_zero());
  CHECK(dual_eval(third(), MultiPoly::parse("x1*x2", 2)).is_zero());
  CHECK(dual_eval(third(), MultiPoly::parse("x1^2", 2)) == Scalar(2));
  CHECK(dual_eval(third(), MultiPoly::parse("5*x2 + 7", 2)) == Scalar(5));
  CHECK(dual_eval(DualFunctional::evaluation(kTop), MultiPoly::parse("x1 + x2^2", 2)) == Scalar(4));
  // coefficient of (x − ξ)^α, not the raw derivative
  const DualFunctional at_one(Point{{Scalar(1)}}, {{{2}, Scalar(1)}});
  CHECK(dual_eval(at_one, MultiPoly::parse("x1^3", 1)) == Scalar(3));
}

TEST_CASE("functionals print and validate") {
  CHECK(DualFunctional::evaluation(kOrigin).to_string() == "1");
  CHECK(d10().to_string() == "d(1,0)");
  CHECK(third().to_string() == "d(0,1)+2*d(2,0)");
  CHECK(third().order() == 2);
  CHECK_THROWS_AS(DualFunctional(kOrigin, {}), DomainError);
  CHECK_THROWS_AS(DualFunctional(kOrigin, {{{1}, Scalar(1)}}), DimensionError);
}

TEST_CASE("shifts") {
  CHECK(*sigma_shift(third(), {1, 0}) == DualFunctional(kOrigin, {{{1, 0}, Scalar(2)}}));
  CHECK(*sigma_shift(third(), {0, 1}) == DualFunctional::evaluation(kOrigin));
  CHECK_FALSE(sigma_shift(third(), {1, 1}).has_value());
}

TEST_CASE("inverse system at a simple root") {
  const MVSystem sys = paper_system();
  const auto inv = inverse_system({sys.poly(0), sys.poly(1)}, kTop);
  REQUIRE(inv.basis.size() == 1);
  CHECK(inv.basis[0].is_evaluation());
  CHECK(inv.dims_by_order == std::vector<std::size_t>{1, 1});
  CHECK_FALSE(inv.truncated);
}

TEST_CASE("inverse system at the triple root") {
  const MVSystem sys = paper_system();
  const auto inv = inverse_system({sys.poly(0), sys.poly(1)}, kOrigin);
  REQUIRE(inv.basis.size() == 3);
  CHECK(inv.basis[0].to_string() == "1");
  CHECK(inv.basis[1].to_string() == "d(1,0)");
  CHECK(inv.basis[2].to_string() == "d(0,1)+2*d(2,0)");
  CHECK(is_sigma_closed(inv.basis));
  CHECK_THROWS_AS(inverse_system({sys.poly(0), sys.poly(1)}, Point{{Scalar(1), Scalar(1)}}), DomainError);
}

TEST_CASE("inverse system of a point of multiplicity 11") {
  const std::vector<MultiPoly> g{MultiPoly::parse("2*x1*x2^2 + 5*x1^4", 2), MultiPoly::parse("2*x1^2*x2 + 5*x2^4", 2)};
  const auto inv = inverse_system(g, kOrigin);
  CHECK(inv.basis.size() == 11);
  CHECK(inv.dims_by_order == std::vector<std::size_t>{1, 3, 6, 8, 10, 11, 11});
  CHECK(is_sigma_closed(inv.basis));
  for (const auto& L : inv.basis)
    for (unsigned deg = 0; deg <= 3; ++deg)
      for (const auto& beta : monomials_of_degree(2, deg))
        for (const auto& gi : g) CHECK(dual_eval(L, gi.times_monomial(beta)).is_zero());
}

TEST_CASE("sigma closure detects a missing shift") {
  CHECK_FALSE(is_sigma_closed({DualFunctional::evaluation(kOrigin), third()}));
  CHECK(is_sigma_closed({DualFunctional::evaluation(kOrigin), d10(), third()}));
}

TEST_CASE("assembling a dual basis") {
  CHECK(paper_duals().group_sizes() == std::vector<std::size_t>{3, 1});
  CHECK_THROWS_AS(assemble_dual_basis({{kOrigin, {d10()}}}, 1), DomainError);
  CHECK_THROWS_AS(assemble_dual_basis({{kTop, {DualFunctional::evaluation(kOrigin)}}}, 1), DomainError);
  CHECK_THROWS_AS(assemble_dual_basis({{kTop, {DualFunctional::evaluation(kTop)}}}, 2), DomainError);
}

TEST_CASE("dual Vandermonde and Wronskian of the worked example") {
  const DualBasis L = paper_duals();
  const auto sets = build_monomial_sets({2, 2, 1}, 2, {{2, MonomialSet(2, {{0, 2}})}});
  CHECK(determinant(dual_vandermonde(sets.T, L)) == Scalar(-4));

  const ExactMatrix w = dual_wronskian(paper_system().poly(2), sets.R, L);
  const Scalar c0 = Scalar::parameter("c0"), c1 = Scalar::parameter("c1"), c2 = Scalar::parameter("c2");
  REQUIRE(sets.R[2] == Exponents{0, 0});
  CHECK(w(2, 0) == c0);
  CHECK(w(2, 1) == c1);
  CHECK(w(2, 2) == c2);
  CHECK(w(2, 3) == c0 + 2 * c2);
  // row x1*f3: d(0,1)+2*d(2,0) picks up 2*c1
  CHECK(w(0, 2) == 2 * c1);
}

TEST_CASE("Poisson-type formula on the worked example") {
  const MVSystem sys = paper_system();
  const MonomialSet S(2, {{2, 0}});
  const auto sets = build_monomial_sets({2, 2, 1}, 2, {{2, MonomialSet(2, {{0, 2}})}});
  const PoissonTerms p = poisson_terms(sys, 2, S, paper_duals(), sets);
  CHECK(p.det_os == Scalar::parse("4*c0^3 + 8*c0^2*c2"));
  CHECK(p.det_vt == Scalar(-4));
  CHECK(p.leading_product == Scalar(-1));
  CHECK(p.value == Scalar::parse("c0^3 + 2*c0^2*c2"));
  CHECK(-p.value == delta_s(sys, 2, S));
}

TEST_CASE("Poisson value does not depend on the choice of T or of the dual basis") {
  const MVSystem sys = paper_system();
  const MonomialSet S(2, {{2, 0}});
  const auto sets = build_monomial_sets({2, 2, 1}, 2, {{2, MonomialSet(2, {{0, 2}})}});
  const Scalar reference = poisson_delta(sys, 2, S, paper_duals(), sets);
  CHECK(poisson_delta(sys, 2, S, paper_duals(), build_monomial_sets({2, 2, 1}, 2)) == reference);

  const DualFunctional mixed(kOrigin, {{{0, 1}, Scalar(1)}, {{2, 0}, Scalar(2)}, {{1, 0}, Scalar(-3)}});
  const DualBasis other = assemble_dual_basis(
      {{kOrigin, {DualFunctional::evaluation(kOrigin), DualFunctional(kOrigin, {{{1, 0}, Scalar(5)}}), mixed}},
       {kTop, {DualFunctional::evaluation(kTop)}}},
      4);
  CHECK(poisson_delta(sys, 2, S, other, sets) == reference);

  const auto singular = build_monomial_sets({2, 2, 1}, 2, {{2, MonomialSet(2, {{1, 1}})}});
  CHECK_THROWS_AS(poisson_delta(sys, 2, S, paper_duals(), singular), StructuralError);
}

TEST_CASE("random plane-product systems satisfy det M = ±E·Poisson") {
  std::mt19937 rng(5);
  int checked = 0;
  for (int trial = 0; trial < 6; ++trial) {
    const auto pp = testing_support::plane_product_system({2, 2}, rng, trial % 3 == 0);
    if (!pp) continue;
    auto all = pp->generators;
    all.push_back(testing_support::random_last(2, 1, rng));
    const MVSystem sys(all, {2, 2, 1});
    for (unsigned t = 0; t <= 3; ++t) {
      const auto sets = testing_support::working_sets(sys, t, pp->duals);
      const MonomialSet S = testing_support::trailing_columns(2, t, sets.counts.k);
      const Scalar lhs = determinant(macaulay_matrix(sys, t, S));
      const Scalar rhs = extraneous_factor(sys, t) * poisson_delta(sys, t, S, pp->duals, sets);
      CHECK((lhs == rhs || lhs == -rhs));
      ++checked;
    }
  }
  CHECK(checked > 0);
}
