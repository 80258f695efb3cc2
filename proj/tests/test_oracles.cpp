#include <gammalab/errors.hpp>
#include <gammalab/families.hpp>
#include <gammalab/oracles.hpp>

#include <doctest.h>

#include "support.hpp"

using namespace gammalab;
using testing_support::P;
using testing_support::V;

TEST_CASE("statistics under the infinite boundary") {
  // 21: one descent; the boundary infinity makes position 1 a double descent
  const StatRecord s21 = perm_stats({2, 1});
  CHECK(s21.des == 1);
  CHECK(s21.pk == 0);
  CHECK(s21.ddes == 1);
  CHECK(s21.lpk == 1);
  CHECK(s21.exc == 1);

  const StatRecord s = perm_stats({1, 3, 2});
  CHECK(s.des == 1);
  CHECK(s.pk == 1);
  CHECK(s.ddes == 0);
  CHECK(s.dasc == 0);
  CHECK(s.lpk == 1);
  CHECK(s.exc == 1);
  CHECK(s.maj == 2);

  const StatRecord id = perm_stats({1, 2, 3});
  CHECK(id.des == 0);
  CHECK(id.dasc == 2);
  CHECK(id.lpk == 0);
}

TEST_CASE("permutation parsing") {
  CHECK(parse_perm("3,1,2") == PermWord{3, 1, 2});
  CHECK(parse_perm("312") == PermWord{3, 1, 2});
  CHECK(parse_perm("3 1 2") == PermWord{3, 1, 2});
  CHECK(perm_to_string({3, 1, 2}) == "3,1,2");
  CHECK_THROWS_AS(parse_perm("3,a"), ParseError);
  CHECK_THROWS_AS(validate_perm({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(validate_perm({0, 1}), std::invalid_argument);
}

TEST_CASE("statistic polynomials on small n") {
  CHECK(stat_polynomial(3, Weight::des) == P("1 4 1"));
  CHECK(stat_polynomial(3, Weight::pk) == P("4 2"));
  CHECK(stat_polynomial(3, Weight::lpk) == P("1 5"));
  CHECK(stat_polynomial(3, Weight::pk_plus_des) == P("1 2 3"));
  CHECK(stat_polynomial(3, Weight::complement_dasc) == P("1 2 3"));
  CHECK(stat_polynomial(2, Weight::beta) == P("1 2 5"));
  CHECK(stat_polynomial(3, Weight::two_des) == P("1 0 4 0 1"));
  CHECK(gamma_count(4) == V({1, 8}));
  CHECK(gamma_count(2) == V({1}));
  CHECK(des_exc_polynomial(3) == biv_des_exc(3));
}

TEST_CASE("enumeration bound is enforced") {
  CHECK_THROWS_AS(stat_polynomial(10, Weight::des), BoundExceeded);
  EnumOptions small;
  small.bound = 4;
  CHECK_THROWS_AS(stat_polynomial(5, Weight::des, small), BoundExceeded);
}

TEST_CASE("threaded enumeration is deterministic") {
  EnumOptions threaded;
  threaded.threads = 4;
  CHECK(stat_polynomial(8, Weight::des, threaded) == stat_polynomial(8, Weight::des));
  CHECK(gamma_count(8, threaded) == gamma_count(8));
}

TEST_CASE("MFS action") {
  const PermWord pi{3, 1, 2};
  for (int x = 1; x <= 3; ++x) CHECK(mfs_phi(mfs_phi(pi, x), x) == pi);
  const auto orbit = mfs_orbit(pi);
  CHECK(orbit.size() == 4);
  CHECK(orbit.front() == PermWord{1, 2, 3});
  long total = 0;
  for (const auto& o : mfs_orbits(4)) total += static_cast<long>(o.size());
  CHECK(total == 24);
  CHECK(mfs_orbits(4).size() == 9);
}

TEST_CASE("Stirling permutations") {
  CHECK(stirling_permutations(2).size() == 3);
  CHECK(stirling_permutations(3).size() == 15);
  CHECK(is_stirling({1, 2, 2, 1}));
  CHECK_FALSE(is_stirling({1, 2, 1, 2}));
  // 1122: plateaus at positions 1 and 3, position 1 only counts with the 0 boundary
  const auto st = stirling_stats({1, 1, 2, 2});
  CHECK(st.ap == 1);
  CHECK(st.lap == 2);
  CHECK(st.fap == 3);
  CHECK(fap_polynomial(2) == P("0 1 1 1"));
  CHECK_THROWS_AS(fap_polynomial(9, kStirlingHardBound), BoundExceeded);
}

TEST_CASE("lattice path and diagram oracles") {
  CHECK(motzkin2_ub_poly(2) == P("1 3 1"));
  CHECK(motzkin2_ub_poly(0) == P("1"));
  CHECK(young2_count(2) == 6);
  CHECK(young2_weight_poly(2, YoungWeighting::sqrt_split) == P("1 4 1"));
  CHECK_THROWS_AS(motzkin2_ub_poly(kMotzkinBound + 1), BoundExceeded);
}

TEST_CASE("pattern avoidance") {
  CHECK(contains_pattern({2, 4, 1, 3}, {2, 3, 1}));
  CHECK_FALSE(contains_pattern({1, 2, 3, 4}, {2, 3, 1}));
  CHECK(pattern_class_descent_poly(3, {{2, 3, 1}}) == P("1 3 1"));
  CHECK(pattern_class_descent_poly(4, {{2, 3, 1}}) == narayana(NarayanaType::A, 3));
}

TEST_CASE("signed permutations") {
  CHECK(signed_descent_polynomial(1) == P("1 1"));
  CHECK(signed_descent_polynomial(2) == P("1 6 1"));
  CHECK_THROWS_AS(signed_descent_polynomial(kSignedBound + 1), BoundExceeded);
}
