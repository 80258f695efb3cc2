#include <gammalab/errors.hpp>
#include <gammalab/gamma.hpp>
#include <gammalab/ratfun.hpp>

#include <doctest.h>

#include "support.hpp"

using namespace gammalab;
using testing_support::P;

TEST_CASE("scalar parsing and printing") {
  CHECK(parse_scalar("3/6") == Scalar(1, 2));
  CHECK(parse_scalar("-4") == Scalar(-4));
  CHECK(to_string(parse_scalar("6/4")) == "3/2");
  CHECK(to_string(Scalar(-5)) == "-5");
  CHECK_THROWS_AS(parse_scalar("1/0"), ParseError);
  CHECK_THROWS_AS(parse_scalar("x"), ParseError);
  CHECK_THROWS_AS(parse_scalar("1.5"), ParseError);
}

TEST_CASE("integer helpers") {
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(factorial(6) == 720);
  CHECK(catalan(5) == 42);
  CHECK(double_factorial_odd(0) == 1);
  CHECK(double_factorial_odd(3) == 15);
  CHECK(power(Scalar(2), -3) == Scalar(1, 8));
}

TEST_CASE("text format round-trips and zero prints as 0") {
  CHECK(to_text(UniPoly()) == "0");
  CHECK(to_text(P("0 0")) == "0");
  const UniPoly f = P("1/2 -3 0 7/9");
  CHECK(to_text(f) == "1/2 -3 0 7/9");
  CHECK(parse_poly(to_text(f)) == f);
  CHECK(to_string_list(f) == std::vector<std::string>{"1/2", "-3", "0", "7/9"});
  CHECK_THROWS_AS(parse_poly("   "), ParseError);
  CHECK_THROWS_AS(parse_poly("1 + x"), ParseError);
}

TEST_CASE("ring operations") {
  const UniPoly a = P("1 1");
  const UniPoly b = P("1 -1");
  CHECK(a * b == P("1 0 -1"));
  CHECK(a + b == P("2"));
  CHECK((a - a).is_zero());
  CHECK(pow(a, 3) == P("1 3 3 1"));
  CHECK(linear_power(Scalar(1), Scalar(2), 2) == P("1 4 4"));
  CHECK(derivative(P("5 1 3")) == P("1 6"));
  CHECK(eval(P("1 2 3"), Scalar(2)) == 17);
  CHECK(P("1 2 0").degree_or(-1) == 1);
  CHECK(UniPoly().degree_or(-1) == -1);
}

TEST_CASE("division, gcd and square-free part") {
  const auto dm = divmod(P("1 0 0 1"), P("1 1"));
  CHECK(dm.quotient == P("1 -1 1"));
  CHECK(dm.remainder.is_zero());
  CHECK(exact_div(P("0 0 1"), P("0 1")) == P("0 1"));
  CHECK_THROWS_AS(exact_div(P("1 0 1"), P("1 1")), NotDivisible);
  CHECK_THROWS(divmod(P("1"), UniPoly()));
  CHECK(gcd(P("-1 0 1"), P("1 2 1")) == P("1 1"));
  CHECK(gcd(UniPoly(), UniPoly()).is_zero());
  CHECK(gcd(P("2 2"), UniPoly()) == P("1 1"));
  CHECK(square_free_part(P("1 3 3 1")) == P("1 1"));
  CHECK(content(P("1/2 3/4")) == Scalar(1, 4));
}

TEST_CASE("substitutions and symmetry") {
  CHECK(taylor_shift(P("0 0 1"), Scalar(1)) == P("1 2 1"));
  CHECK(taylor_shift(P("1 2 1"), Scalar(-1)) == P("0 0 1"));
  CHECK(reverse(P("1 2"), 3) == P("0 0 2 1"));
  CHECK_THROWS_AS(reverse(P("1 2 3"), 1), DegreeTooSmall);
  CHECK(power_substitute(P("1 1"), 3) == P("1 0 0 1"));
  CHECK(is_symmetric(P("1 4 1"), 2));
  CHECK(is_symmetric(P("0 1 1"), 3));
  CHECK_FALSE(is_symmetric(P("1 4 2"), 2));
  CHECK(divide_by_one_minus_x(P("1 0 -1")) == P("1 1"));
  CHECK_THROWS_AS(divide_by_one_minus_x(P("1 1")), NotDivisible);
}

TEST_CASE("f-vector to h-vector") {
  // boundary of a triangle: 1 empty face, 3 vertices, 3 edges
  CHECK(f_to_h(P("1 3 3"), 2) == P("1 1 1"));
  // boundary of a square: h = 1 + 2x + x^2
  CHECK(f_to_h(P("1 4 4"), 2) == P("1 2 1"));
}

TEST_CASE("bivariate helpers") {
  // 1 + s t + s^2 t^2
  const BiPoly f{UniPoly{1}, UniPoly{0, 1}, UniPoly{0, 0, 1}};
  CHECK(substitute_s(f, Scalar(2)) == P("1 2 4"));
  CHECK(substitute_t(f, Scalar(1)) == P("1 1 1"));
  CHECK(lift_s(P("1 2")) == BiPoly{UniPoly{1}, UniPoly{2}});
  const auto d = symmetric_decomposition(BiPoly{UniPoly{1}, UniPoly{0, 1}}, 1);
  CHECK(d.a == BiPoly{UniPoly{1}, UniPoly{1}});
  CHECK(d.b == BiPoly{UniPoly{-1, 1}});
}

TEST_CASE("rational functions") {
  const RatFun r(P("2 2"), P("4 4 0"));
  CHECK(r == RatFun(P("1")) * RatFun(P("1"), P("2")));
  // denominators are primitive integer polynomials with positive leading coefficient
  CHECK(r.den() == P("1"));
  CHECK(r.num() == P("1/2"));
  CHECK(RatFun(P("1"), P("-2")) == RatFun(P("-1/2")));
  CHECK_THROWS(RatFun(P("1"), UniPoly()));
  const RatFun geom(P("1"), P("1 -1"));
  CHECK(derivative(geom) == RatFun(P("1"), P("1 -2 1")));
  // (xD) 1/(1-x) = x/(1-x)^2 and (xD)^2 1/(1-x) = x(1+x)/(1-x)^3
  CHECK(apply_diff_operator(RatFun(P("0 1")), geom, 1) == RatFun(P("0 1"), P("1 -2 1")));
  CHECK(apply_diff_operator(RatFun(P("0 1")), geom, 2) == RatFun(P("0 1 1"), P("1 -3 3 -1")));
  CHECK(apply_diff_operator(RatFun(P("0 1")), geom, 0) == geom);
  // 1 + r + r^2 at r = 1/x  gives (x^2 + x + 1)/x^2
  CHECK(compose(P("1 1 1"), RatFun(P("1"), P("0 1"))) == RatFun(P("1 1 1"), P("0 0 1")));
  CHECK(pow(geom, 2) == RatFun(P("1"), P("1 -2 1")));
}
