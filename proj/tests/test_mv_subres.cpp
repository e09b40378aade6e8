#include <doctest.h>

#include "subres/errors.hpp"
#include "subres/mv_subres.hpp"
#include "subres/uni_subres.hpp"

using namespace subres;

namespace {

bool equal_up_to_sign(const Scalar& a, const Scalar& b) { return a == b || a == -b; }

MVSystem paper_system() {
  return MVSystem({MultiPoly::parse("x1*x2", 2), MultiPoly::parse("x1^2 + (x2-1)^2 - 1", 2),
                   MultiPoly::parse("c0 + c1*x1 + c2*x2", 2)},
                  {2, 2, 1});
}

// Coefficient of z^t in ∏ (1 + z + … + z^{D−1}) over all n+1 degrees.
std::size_t hilbert_series_oracle(const std::vector<unsigned>& degrees, unsigned t) {
  std::vector<std::size_t> series{1};
  for (unsigned d : degrees) {
    std::vector<std::size_t> next(series.size() + d - 1, 0);
    for (std::size_t a = 0; a < series.size(); ++a)
      for (unsigned b = 0; b < d; ++b) next[a + b] += series[a];
    series = std::move(next);
  }
  return t < series.size() ? series[t] : 0;
}

MultiPoly univariate(const UniPoly& p) {
  MultiPoly out(1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    out += MultiPoly::monomial({static_cast<unsigned>(i)}, p.coeffs()[i]);
  return out;
}

}  // namespace

TEST_CASE("Hilbert function against the series oracle") {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::vector<unsigned> degrees(n + 1, 1);
    for (int code = 0; code < 1 << (2 * (n + 1)); ++code) {
      for (std::size_t i = 0; i <= n; ++i) degrees[i] = 1 + ((code >> (2 * i)) & 3);
      for (unsigned t = 0; t <= 8; ++t) CHECK(hilbert_function(degrees, t) == hilbert_series_oracle(degrees, t));
    }
  }
}

TEST_CASE("tau counts") {
  CHECK(tau({2, 2}, 0) == 1);
  CHECK(tau({2, 2}, 1) == 2);
  CHECK(tau({2, 2}, 2) == 1);
  CHECK(tau({2, 2}, 3) == 0);
  CHECK(tau({3, 2}, 2) == 2);
  std::size_t bezout = 0;
  for (unsigned j = 0; j <= 6; ++j) bezout += tau({2, 3, 2}, j);
  CHECK(bezout == 12);
}

TEST_CASE("monomial sets of the worked example") {
  const auto sets = build_monomial_sets({2, 2, 1}, 2, {{2, MonomialSet(2, {{0, 2}})}});
  CHECK(sets.R == MonomialSet(2, {{0, 0}, {1, 0}, {0, 1}}));
  CHECK(sets.T_star.empty());
  CHECK(sets.T == MonomialSet(2, {{0, 0}, {1, 0}, {0, 1}, {0, 2}}));
  CHECK(sets.counts.k == 1);
  CHECK(sets.counts.bezout == 4);
  CHECK(sets.counts.k + sets.counts.s + sets.counts.r == 4);

  CHECK(build_monomial_sets({2, 2, 1}, 2).T_by_degree[2] == MonomialSet(2, {{2, 0}}));
  CHECK(build_monomial_sets({2, 2, 1}, 2, {}, TChoice::reduced).T_by_degree[2] == MonomialSet(2, {{1, 1}}));
  CHECK_THROWS_AS(build_monomial_sets({2, 2, 1}, 2, {{2, MonomialSet(2, {{0, 2}, {1, 1}})}}), DomainError);
  CHECK_THROWS_AS(build_monomial_sets({2, 2, 1}, 2, {{1, MonomialSet(2, {{0, 1}, {1, 0}})}}), DomainError);
}

TEST_CASE("monomial sets reject duplicates and keep canonical order") {
  CHECK_THROWS_AS(MonomialSet(2, {{1, 0}, {1, 0}}), DomainError);
  const MonomialSet s(2, {{0, 1}, {2, 0}, {0, 0}});
  CHECK(s[0] == Exponents{2, 0});
  CHECK(s.degree_bound() == 2);
  CHECK(s.contains({0, 0}));
}

TEST_CASE("worked Macaulay determinant") {
  const MVSystem sys = paper_system();
  const MonomialSet S(2, {{2, 0}});
  const ExactMatrix m = macaulay_matrix(sys, 2, S);
  CHECK(m.rows() == 5);
  CHECK(m.cols() == 5);
  CHECK(extraneous_factor(sys, 2).is_one());
  CHECK(delta_s(sys, 2, S) == -Scalar::parse("c0^3 + 2*c0^2*c2"));
  CHECK(delta_s(sys.substitute({{"c0", Scalar(1)}, {"c1", Scalar(1)}, {"c2", Scalar(1)}}), 2, S) == Scalar(-3));
  CHECK_THROWS_AS(macaulay_matrix(sys, 2, MonomialSet(2, {})), DomainError);
}

TEST_CASE("vanishing extraneous factor is reported") {
  const MVSystem sys({MultiPoly::parse("x2", 2), MultiPoly::parse("x1", 2), MultiPoly::parse("x1 + x2 + 1", 2)}, {1, 1, 1});
  CHECK(extraneous_factor(sys, 2).is_zero());
  CHECK_THROWS_WITH_AS(delta_s(sys, 2, MonomialSet(2, {})), doctest::Contains("perturb inputs manually"), DomainError);
}

TEST_CASE("system validation") {
  CHECK_THROWS_AS(MVSystem({MultiPoly::parse("x1^3", 1), MultiPoly::parse("x1", 1)}, {2, 1}), DomainError);
  CHECK_THROWS_AS(MVSystem({MultiPoly::parse("x1", 1), MultiPoly::parse("x1", 2)}, {1, 1}), DimensionError);
  CHECK_THROWS_AS(MVSystem({MultiPoly::parse("x1", 1), MultiPoly::parse("x1", 1)}, {1}), DimensionError);
}

TEST_CASE("one variable, top degree: the resultant") {
  const UniPoly f({2, -3, 1}), g({Scalar(-1, 2), 0, 0, 1});
  const MVSystem sys({univariate(f), univariate(g)}, {2, 3});
  CHECK(equal_up_to_sign(delta_s(sys, 4, MonomialSet(1, {})), resultant(f, g)));

  const UniPoly p({1, 0, 2, -1, 3}), q({0, 5, -2, 1, 1, 2});
  const MVSystem sys2({univariate(p), univariate(q)}, {4, 5});
  CHECK(equal_up_to_sign(determinant(macaulay_matrix(sys2, 8, MonomialSet(1, {}))), resultant(p, q)));
}

TEST_CASE("one variable, lower degrees: subresultant coefficients as minors") {
  const UniPoly f({3, -1, 0, 2}), g({1, 4, -2, 0, 1});
  const std::size_t d = 3, e = 4;
  const MVSystem sys({univariate(f), univariate(g)}, {3, 4});
  for (std::size_t tau_ = 1; tau_ < d; ++tau_) {
    const unsigned t = static_cast<unsigned>(d + e - 1 - tau_);
    CHECK(hilbert_function({3, 4}, t) == tau_);
    const UniPoly s = sres_coeff(f, g, tau_);
    for (std::size_t j = 0; j <= tau_; ++j) {
      std::vector<Exponents> deleted;
      for (unsigned i = 0; i <= tau_; ++i)
        if (i != j) deleted.push_back({i});
      CHECK(equal_up_to_sign(determinant(macaulay_matrix(sys, t, MonomialSet(1, deleted))), s.coeff(j)));
    }
  }
}

TEST_CASE("leading-form subresultants") {
  const std::vector<MultiPoly> forms{MultiPoly::parse("x1*x2", 2), MultiPoly::parse("x1^2 + x2^2", 2)};
  CHECK(leading_form_subres(forms, {2, 2}, 2, MonomialSet(2, {{0, 2}})) == Scalar(-1));
  CHECK_THROWS_AS(leading_form_subres(forms, {2, 2}, 2, MonomialSet(2, {})), DomainError);

  // binary quadrics: degree 2 is a 2x2 coefficient minor, degree 3 the resultant
  const Scalar a = Scalar::parameter("a"), b = Scalar::parameter("b");
  const std::vector<MultiPoly> q{MultiPoly::parse("2*x1^2 + a*x1*x2 - x2^2", 2), MultiPoly::parse("x1^2 - 3*x1*x2 + b*x2^2", 2)};
  const auto cols = monomials_of_degree(2, 2);
  for (std::size_t drop = 0; drop < 3; ++drop) {
    std::vector<Exponents> keep;
    for (std::size_t c = 0; c < 3; ++c)
      if (c != drop) keep.push_back(cols[c]);
    ExactMatrix minor(2, 2);
    for (Eigen::Index r = 0; r < 2; ++r)
      for (Eigen::Index c = 0; c < 2; ++c) minor(r, c) = q[static_cast<std::size_t>(r)].coeff(keep[static_cast<std::size_t>(c)]);
    CHECK(equal_up_to_sign(leading_form_subres(q, {2, 2}, 2, MonomialSet(2, {cols[drop]})), determinant(minor)));
  }
  const UniPoly q1({Scalar(-1), a, Scalar(2)}), q2({b, Scalar(-3), Scalar(1)});
  CHECK(equal_up_to_sign(leading_form_subres(q, {2, 2}, 3, MonomialSet(2, {})), resultant(q1, q2)));
}
