#include <gammalab/errors.hpp>
#include <gammalab/families.hpp>
#include <gammalab/stability.hpp>

#include <doctest.h>

#include "support.hpp"

using namespace gammalab;
using testing_support::P;

namespace {

const ExtScalar kNegInf = ExtScalar::neg_infinity();
const ExtScalar kPosInf = ExtScalar::pos_infinity();
ExtScalar at(long v) { return ExtScalar::of(Scalar(v)); }

}  // namespace

TEST_CASE("Sturm counts on half-open intervals") {
  CHECK(sturm_real_root_count(P("-2 0 1"), kNegInf, kPosInf) == 2);
  CHECK(sturm_real_root_count(P("-2 0 1"), at(0), at(2)) == 1);
  CHECK(sturm_real_root_count(P("1 0 1"), kNegInf, kPosInf) == 0);
  // x(x-1): the root at lo = 0 is excluded, the root at hi = 1 is included
  CHECK(sturm_real_root_count(P("0 -1 1"), at(0), at(1)) == 1);
  CHECK(sturm_real_root_count(P("0 -1 1"), at(-1), at(0)) == 1);
  // repeated roots count once
  CHECK(sturm_real_root_count(P("1 -2 1"), kNegInf, kPosInf) == 1);
  CHECK_THROWS(sturm_real_root_count(UniPoly(), kNegInf, kPosInf));
  CHECK_THROWS(sturm_real_root_count(P("1 1"), at(1), at(0)));
}

TEST_CASE("root isolation with multiplicities") {
  // (x-1)^2 (x+2) = 2 - 3x + x^3
  const auto iso = isolate_real_roots(P("2 -3 0 1"));
  REQUIRE(iso.intervals.size() == 2);
  CHECK(iso.intervals[0].multiplicity == 1);
  CHECK(iso.intervals[1].multiplicity == 2);
  CHECK(iso.intervals[0].hi <= iso.intervals[1].lo);
  CHECK(iso.total_multiplicity() == 3);
  CHECK(is_real_rooted(P("2 -3 0 1")));
  CHECK_FALSE(is_real_rooted(P("1 0 1")));
  CHECK(is_real_rooted(P("5")));
}

TEST_CASE("interlacing relations") {
  // roots -1 against -2, 0
  CHECK(interlacing_relation(P("1 1"), P("0 2 1")) == Interlacing::interlaces);
  // -3 <= -1
  CHECK(interlacing_relation(P("3 1"), P("1 1")) == Interlacing::alternates_left);
  CHECK(interlacing_relation(P("1 1"), P("3 1")) == Interlacing::neither);
  // a shared root satisfies the weak inequalities
  CHECK(interlacing_relation(P("1 1"), P("1 2 1")) == Interlacing::interlaces);
  CHECK(interlacing_relation(P("1 1"), P("0 0 0 1")) == Interlacing::neither);
  CHECK_THROWS_AS(interlacing_relation(P("-1 -1"), P("1 1")), NotStandard);
  CHECK_THROWS_AS(interlacing_relation(P("1 1"), P("1 0 1")), NotRealRooted);
}

TEST_CASE("Hermite-Biehler classification") {
  CHECK(hurwitz_classify(P("1 3 4 3 1")).status == HurwitzStatus::stable);
  CHECK(hurwitz_classify(P("1 2 3 1")).status == HurwitzStatus::stable);
  CHECK(hurwitz_classify(P("1 0 1")).status == HurwitzStatus::weakly_stable_only);
  CHECK(hurwitz_classify(P("0 0 0 1")).status == HurwitzStatus::weakly_stable_only);
  CHECK(hurwitz_classify(P("0 1 1")).status == HurwitzStatus::weakly_stable_only);
  // (1+x)(1+x^2): the gcd of the parts is 1 + y
  const auto cyc = hurwitz_classify(P("1 1 1 1"));
  CHECK(cyc.status == HurwitzStatus::weakly_stable_only);
  CHECK(cyc.certificate.find("gcd") != std::string::npos);
  CHECK(hurwitz_classify(P("3")).status == HurwitzStatus::stable);
  CHECK(hurwitz_classify(P("-1 1")).status == HurwitzStatus::unstable);
  const auto neg = hurwitz_classify(P("1 -1"));
  CHECK(neg.status == HurwitzStatus::unstable);
  CHECK(neg.certificate.rfind("negated", 0) == 0);
  CHECK(hurwitz_classify(P("-1 -1")).status == HurwitzStatus::stable);
  CHECK_THROWS_AS(hurwitz_classify(UniPoly()), NotStandard);
}

TEST_CASE("Routh test") {
  CHECK(routh_stable(P("1 3 4 3 1")) == RouthResult::stable);
  CHECK(routh_stable(P("1 2 3 1")) == RouthResult::stable);
  CHECK(routh_stable(P("1 -1")) == RouthResult::not_stable);
  CHECK(routh_stable(P("1 0 1")) == RouthResult::indeterminate);
  CHECK(routh_stable(P("1 1 1 1")) == RouthResult::indeterminate);
  CHECK(routh_stable(P("-2 -1")) == RouthResult::stable);
  // 1 + x + x^2 + 3x^3: the third pivot is (1*1 - 3*1)/1 < 0
  CHECK(routh_stable(P("1 1 1 3")) == RouthResult::not_stable);
  CHECK(hurwitz_classify(P("1 1 1 3")).status == HurwitzStatus::unstable);
}

TEST_CASE("MN polynomials are stable") {
  for (long n = 1; n <= 8; ++n) {
    CAPTURE(n);
    const UniPoly f = mn_combination(n);
    CHECK(hurwitz_classify(f).status == HurwitzStatus::stable);
    CHECK(routh_stable(f) == RouthResult::stable);
  }
}
