#include <gammalab/errors.hpp>
#include <gammalab/families.hpp>
#include <gammalab/gamma.hpp>

#include <doctest.h>

#include "support.hpp"

using namespace gammalab;
using testing_support::P;
using testing_support::V;

TEST_CASE("gamma expansion of small symmetric polynomials") {
  // 1 + 3x + x^2 = (1+x)^2 + x
  CHECK(gamma_expand(P("1 3 1"), 2).coeffs == V({1, 1}));
  // 1 + x^2 = (1+x)^2 - 2x
  CHECK(gamma_expand(P("1 0 1"), 2).coeffs == V({1, -2}));
  // A_4 = 1 + 11x + 11x^2 + x^3 = (1+x)^3 + 8x(1+x)
  CHECK(gamma_expand(P("1 11 11 1"), 3).coeffs == V({1, 8}));
  // symmetric about a larger center: x(1+x) about 3 has gamma (0, 1)
  CHECK(gamma_expand(P("0 1 1"), 3).coeffs == V({0, 1}));
  CHECK_THROWS_AS(gamma_expand(P("1 2 3"), 2), NotSymmetric);
  CHECK_THROWS_AS(gamma_expand(P("1 2 1"), 1), DegreeTooSmall);
}

TEST_CASE("alternating gamma expansion and reconstruction") {
  // 1 + x^2 = (1+x)^2 - 2x, so in (-x)^k (1+x)^{2-2k}: (1, 2)
  const auto g = alt_gamma_expand(P("1 0 1"), 2);
  CHECK(g.coeffs == V({1, 2}));
  CHECK(g.sign == BasisSign::minus);
  CHECK(reconstruct(g) == P("1 0 1"));
  // (1+x^2)^2 counts faces of the square: (1, 4, 4)
  CHECK(alt_gamma_expand(P("1 0 2 0 1"), 4).coeffs == V({1, 4, 4}));
  // gamma_vector on the empty frame
  CHECK(gamma_expand(P("5"), 0).coeffs == V({5}));
}

TEST_CASE("binomial bases") {
  // 1 + 3x + 2x^2 = (1+x)^2 + x(1+x) in x^k (1+x)^{2-k}
  const auto e = binomial_basis_expand(P("1 3 2"), 2, BasisSign::plus);
  CHECK(e.coeffs == V({1, 1, 0}));
  CHECK(reconstruct(e) == P("1 3 2"));
  const auto m = binomial_basis_expand(P("1 3 2"), 2, BasisSign::minus);
  CHECK(reconstruct(m) == P("1 3 2"));
  CHECK_THROWS_AS(binomial_basis_expand(P("1 0 0 1"), 2, BasisSign::plus), DegreeTooSmall);
}

TEST_CASE("eta and xi transforms") {
  // gamma = (1, 1) at n = 2: sum gamma_i x^{2i} (1+2x)^{2-2i} = 1 + 4x + 5x^2
  const GammaExpansion g{2, V({1, 1}), BasisSign::plus};
  CHECK(eta_from_gamma(g) == V({1, 4, 5}));
  // 1 + 4x + 5x^2 = (1+x)^2 + 2x(1+x) + 2x^2
  CHECK(xi_from_gamma(g) == V({1, 2, 2}));
}

TEST_CASE("Hermite-Biehler split") {
  const auto s = hermite_biehler_split(P("1 2 3 4 5"));
  CHECK(s.even == P("1 3 5"));
  CHECK(s.odd == P("2 4"));
  CHECK(hermite_biehler_split(UniPoly()).even.is_zero());
}

TEST_CASE("semi-gamma decompositions of A_6") {
  const UniPoly a6 = eulerian_a(6);
  const auto d = semi_gamma_decompose(a6);
  CHECK(d.nu == 1);
  CHECK(d.f1 == P("1 246 1"));
  CHECK(d.f2 == P("56 56"));
  CHECK(reconstruct(d) == a6);
  const auto alt = alt_semi_gamma_decompose(a6);
  CHECK(alt.xi == V({1, 4, 248}));
  CHECK(alt.zeta == V({56, 112}));
  CHECK(reconstruct(alt) == a6);
}

TEST_CASE("semi-gamma second example") {
  const UniPoly f = P("1 7 29 31 29 7 1");
  CHECK(gamma_expand(f, 6).coeffs == V({1, 1, 10, -15}));
  CHECK(semi_gamma_decompose(f).lambda == V({1, 7, 26, 17}));
  const auto alt = alt_semi_gamma_decompose(f);
  CHECK(alt.xi == V({1, 6, 38, 60}));
  CHECK(alt.zeta == V({7, 28, 45}));
}

TEST_CASE("semi-gamma errors") {
  CHECK_THROWS_AS(semi_gamma_decompose(P("1 2 3")), NotDecomposable);
  CHECK_THROWS_AS(alt_semi_gamma_decompose(P("1 2 3")), NotSemiGammaPositive);
  // 1 + x + x^2 + x^3 = (1+x)(1+x^2); f1 = 1 + y, f2 = 0 in y = x^2
  const auto d = semi_gamma_decompose(P("1 1 1 1"));
  CHECK(d.nu == 1);
  CHECK(reconstruct(d) == P("1 1 1 1"));
}

TEST_CASE("unimodality") {
  CHECK(is_unimodal(P("1 3 3 1"), 3));
  CHECK(is_unimodal(P("1 1 1"), 2));
  CHECK_FALSE(is_unimodal(P("1 0 1"), 2));
  CHECK_FALSE(is_unimodal(P("2 1 2"), 2));
  CHECK(all_nonnegative(V({0, 1, 2})));
  CHECK_FALSE(all_nonnegative(V({0, -1})));
}

TEST_CASE("classify the counterexample") {
  const auto base = classify(P("1 4 1"), 2);
  CHECK(base.symmetric == Flag::yes);
  CHECK(base.gamma_positive == Flag::yes);
  const UniPoly cube = power_substitute(P("1 4 1"), 3);
  CHECK(alt_gamma_expand(cube, 6).coeffs == V({1, 6, 9, -2}));
  CHECK(classify(cube, 6).alt_gamma_positive == Flag::no);
  // the square substitution is alternatingly gamma-positive
  CHECK(classify(power_substitute(P("1 4 1"), 2), 4).alt_gamma_positive == Flag::yes);
}

TEST_CASE("classify flags not_applicable outside the symmetric case") {
  const auto p = classify(P("1 2 3"), 2);
  CHECK(p.symmetric == Flag::no);
  CHECK(p.gamma_positive == Flag::not_applicable);
  CHECK(to_string(Flag::not_applicable) == "not_applicable");
}

TEST_CASE("symmetric decomposition of Q_2") {
  // Q_2 = 12 + 30x + 21x^2 = 3(4 + 7x + 4x^2) + 9x(1+x)
  const auto d = symmetric_decomposition(P("12 30 21"), 2);
  CHECK(d.a == P("12 21 12"));
  CHECK(d.b == P("9 9"));
}
