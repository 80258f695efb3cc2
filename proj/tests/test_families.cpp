#include <gammalab/errors.hpp>
#include <gammalab/families.hpp>
#include <gammalab/gamma.hpp>

#include <doctest.h>

#include "support.hpp"

using namespace gammalab;
using testing_support::P;

namespace {

BiPoly bi(std::initializer_list<const char*> t_coeffs) {
  std::vector<UniPoly> rows;
  for (const char* row : t_coeffs) rows.push_back(P(row));
  return BiPoly(std::move(rows));
}

}  // namespace

TEST_CASE("Eulerian polynomials") {
  CHECK(eulerian_a(0) == P("1"));
  CHECK(eulerian_a(1) == P("1"));
  CHECK(eulerian_a(3) == P("1 4 1"));
  CHECK(eulerian_a(6) == P("1 57 302 302 57 1"));
  CHECK(eulerian_b(0) == P("1"));
  CHECK(eulerian_b(2) == P("1 6 1"));
  CHECK(eulerian_b(3) == P("1 23 23 1"));
  CHECK_THROWS_AS(eulerian_a(-1), std::invalid_argument);
}

TEST_CASE("Narayana polynomials") {
  CHECK(narayana(NarayanaType::A, 0) == P("1"));
  CHECK(narayana(NarayanaType::A, 3) == P("1 6 6 1"));
  CHECK(narayana(NarayanaType::B, 2) == P("1 4 1"));
  CHECK(narayana(NarayanaType::B, 3) == P("1 9 9 1"));
  // N(D_n) = N(B_n) - n x N(A_{n-2})
  CHECK(narayana(NarayanaType::D, 2) == P("1 2 1"));
  CHECK(narayana(NarayanaType::D, 3) == P("1 6 6 1"));
  CHECK_THROWS_AS(narayana(NarayanaType::D, 1), TypeDRange);
}

TEST_CASE("peak polynomials") {
  CHECK(peak_poly(1) == P("1"));
  CHECK(peak_poly(2) == P("2"));
  CHECK(peak_poly(3) == P("4 2"));
  CHECK(left_peak_poly(0) == P("1"));
  CHECK(left_peak_poly(1) == P("1"));
  CHECK(left_peak_poly(2) == P("1 1"));
  CHECK(left_peak_poly(3) == P("1 5"));
  CHECK_THROWS_AS(peak_poly(0), std::invalid_argument);
}

TEST_CASE("L and Lhat polynomials") {
  CHECK(l_poly(1) == P("1"));
  CHECK(l_poly(2) == P("1 1 1"));
  CHECK(l_poly(3) == P("1 2 4 2 1"));
  CHECK(l_poly(4) == P("1 3 9 9 9 3 1"));
  CHECK(l_poly(5) == P("1 4 16 24 36 24 16 4 1"));
  CHECK(lhat_poly(0) == P("1"));
  for (long n = 1; n <= 6; ++n) {
    CHECK(lhat_poly(n) == P("1 1") * l_poly(n));
    CHECK(l_closed(n) == l_poly(n));
    CHECK(lhat_closed(n) == lhat_poly(n));
  }
}

TEST_CASE("a, b, alpha and beta polynomials") {
  CHECK(ab_poly(AbKind::a, 1) == P("1"));
  CHECK(ab_poly(AbKind::a, 2) == P("1 2"));
  CHECK(ab_poly(AbKind::a, 3) == P("1 4 6"));
  CHECK(ab_poly(AbKind::a, 4) == P("1 6 20 24"));
  CHECK(ab_poly(AbKind::b, 0) == P("1"));
  CHECK(ab_poly(AbKind::b, 1) == P("1 2"));
  CHECK(ab_poly(AbKind::b, 2) == P("1 4 8"));
  CHECK(ab_poly(AbKind::b, 3) == P("1 6 32 48"));
  CHECK(ab_poly(AbKind::alpha, 1) == P("1"));
  CHECK(ab_poly(AbKind::alpha, 2) == P("1 1"));
  CHECK(ab_poly(AbKind::alpha, 3) == P("1 2 3"));
  CHECK(ab_poly(AbKind::alpha, 4) == P("1 3 11 9"));
  CHECK(ab_poly(AbKind::beta, 1) == P("1 1"));
  CHECK(ab_poly(AbKind::beta, 2) == P("1 2 5"));
  CHECK(ab_poly(AbKind::beta, 3) == P("1 3 23 21"));
  CHECK_THROWS_AS(ab_poly(AbKind::a, 0), std::invalid_argument);
  for (long n = 1; n <= 7; ++n) {
    CHECK(a_closed(n) == ab_poly(AbKind::a, n));
    CHECK(b_closed(n) == ab_poly(AbKind::b, n));
    CHECK(alpha_closed(n) == ab_poly(AbKind::alpha, n));
    CHECK(beta_closed(n) == ab_poly(AbKind::beta, n));
  }
}

TEST_CASE("flag ascent-plateau polynomials") {
  CHECK(flag_ap_poly(0) == P("1"));
  CHECK(flag_ap_poly(1) == P("0 1"));
  CHECK(flag_ap_poly(2) == P("0 1 1 1"));
  CHECK(flag_ap_poly(3) == P("0 1 3 7 3 1"));
  CHECK(flag_ap_poly(4) == P("0 1 7 29 31 29 7 1"));
}

TEST_CASE("Boros-Moll polynomials and Q_m") {
  CHECK(boros_moll(0) == P("1"));
  CHECK(boros_moll(5) == P("4389/256 8589/128 7161/64 777/8 693/16 63/8"));
  CHECK(boros_moll_by_recurrence(5) == boros_moll(5));
  CHECK(q_poly(0) == P("1"));
  CHECK(q_poly(1) == P("2 3"));
  CHECK(q_poly(2) == P("12 30 21"));
  CHECK(q_poly(3) == P("120 420 516 231"));
  CHECK(q_poly(4) == P("1680 7560 13140 10620 3465"));
  CHECK(q_poly(5) == P("30240 166320 372960 429660 257670 65835"));
  for (long m = 0; m <= 8; ++m) CHECK(q_from_boros_moll(m) == q_poly(m));
}

TEST_CASE("symmetric decompositions of Q_m") {
  const auto d2 = symmetric_decomposition(q_poly(2), 2);
  CHECK(d2.a == P("12 21 12"));
  CHECK(d2.b == P("9 9"));
  // the leading factor of the degree-3 part is 3: the constant term is 120
  const auto d3 = symmetric_decomposition(q_poly(3), 3);
  CHECK(d3.a == P("120 309 309 120"));
  CHECK(d3.b == P("111 207 111"));
  const auto d4 = symmetric_decomposition(q_poly(4), 4);
  CHECK(d4.a == P("16 55 79 55 16") * Scalar(105));
  CHECK(d4.b == P("1 1") * P("7 12 7") * Scalar(255));
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == P("-1 1"));
  CHECK(cyclotomic(2) == P("1 1"));
  CHECK(cyclotomic(6) == P("1 -1 1"));
  CHECK(cyclotomic(12) == P("1 0 -1 0 1"));
  CHECK_THROWS_AS(cyclotomic(0), std::invalid_argument);
}

TEST_CASE("bivariate des/exc polynomials") {
  CHECK(biv_des_exc(1) == bi({"1"}));
  CHECK(biv_des_exc(2) == bi({"1", "0 1"}));
  CHECK(biv_des_exc(3) == bi({"1", "0 3 1", "0 1"}));
  CHECK(biv_des_exc(4) == bi({"1", "0 6 5", "0 4 6 1", "0 1"}));
  CHECK(biv_des_exc(5) == bi({"1", "0 10 15 1", "0 10 36 19 1", "0 5 15 6", "0 1"}));
  CHECK_THROWS_AS(biv_des_exc(10), BoundExceeded);
}

TEST_CASE("MN combination") {
  CHECK(mn_combination(1) == P("1 2 1"));
  CHECK(mn_combination(3) == P("1 4 9 12 9 4 1"));
}

TEST_CASE("family ids and names") {
  CHECK(family_name(FamilyId::EULERIAN_A) == "eulerian_a");
  CHECK(family_from_name("q_poly") == FamilyId::Q_POLY);
  CHECK_FALSE(family_from_name("nope").has_value());
  for (FamilyId id : all_families()) CHECK(family_from_name(family_name(id)) == id);
  CHECK(family(FamilyId::NARAYANA_B, 2) == P("1 4 1"));
  CHECK_THROWS_AS(family(FamilyId::BIV_DES_EXC, 2), std::invalid_argument);
  CHECK(default_family_provider().get(FamilyId::PEAK, 3) == P("4 2"));
}
