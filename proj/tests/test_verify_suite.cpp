#include <gammalab/errors.hpp>
#include <gammalab/verify.hpp>

#include <doctest.h>

#include <set>

using namespace gammalab;

namespace {

/// Provider that bumps the middle coefficient of A_5 from 66 to 67.
class CorruptedA5 : public FamilyProvider {
 public:
  UniPoly get(FamilyId id, long n) const override {
    UniPoly f = family(id, n);
    if (id != FamilyId::EULERIAN_A || n != 5) return f;
    auto c = f.coeffs();
    c[2] += 1;
    return UniPoly(std::move(c));
  }
};

}  // namespace

TEST_CASE("registry is sorted, unique and well-formed") {
  const auto& reg = registry();
  REQUIRE(reg.size() >= 60);
  std::set<std::string> ids;
  for (std::size_t i = 0; i < reg.size(); ++i) {
    CAPTURE(reg[i].id);
    CHECK(ids.insert(reg[i].id).second);
    if (i > 0) CHECK(reg[i - 1].id < reg[i].id);
    CHECK(reg[i].min_param <= reg[i].default_bound);
    CHECK(reg[i].default_bound <= reg[i].max_bound);
    CHECK_FALSE(reg[i].description.empty());
  }
}

TEST_CASE("every in-scope result maps to a registered check") {
  const char* required[] = {
      "ANXBNX",      "FOATA",       "MFS_ORBIT",    "MFS_ORBIT_SQ", "PNQN",       "PNQN02",       "CUBE",
      "COKER1",      "COKER2",      "RIORDAN",      "CWZ",          "NA_ALT",     "NB_ALT",       "NA_SHIFT",
      "NB_SHIFT",    "ND_ALT",      "OPID_A",       "OPID_A2",      "OPID_B2",    "OPID_NA",      "OPID_NB",
      "OPID_MN",     "MN_GAMMA",    "MN_STABLE",    "MN_FACTOR",    "LN_RECU",    "LN_CLOSED",    "LN_SUM",
      "STEMBRIDGE",  "LEFTPEAK_B",  "THM51_I",      "THM51_II",     "THM51_III",  "THM51_IV",     "COR15",
      "ABREC",       "SPECIALS",    "ALPHA_ORACLE", "BETA_ORACLE",  "FN_SEMI",    "FN_CONV",      "THM_FNX",
      "PRODUCT_LEMMA", "THM31_I",   "THM31_II",     "THM31_III",    "THM31_IV",   "ODD_CEX",      "CYCLO_RED",
      "CM_COUNT",    "CY_COUNT",    "NARA_231",     "NARA_B4",      "BM_RECU",    "BM_Q",         "SYMDEC",
      // oracle agreement, worked examples and structural identities
      "DES_ORACLE",  "PEAK_ORACLE", "LPK_ORACLE",   "FAP_ORACLE",   "BDES_ORACLE", "MFS_INVOLUTION", "FTOH",
      "LUCAS",       "HB_SPLIT",    "MN_DERIV",     "MN_INTERLACE", "HAT_RECU",   "SEMI_EXAMPLES", "SEMI_LEMMA",
      "BIV_MARGINALS",
  };
  for (const char* id : required) {
    CAPTURE(id);
    CHECK(find_identity(id) != nullptr);
  }
}

TEST_CASE("all checks pass at default bounds") {
  for (const auto& r : run_all()) {
    CAPTURE(r.id);
    CAPTURE(r.witness.dump());
    CHECK(r.status == "pass");
  }
}

TEST_CASE("run_identity errors and ranges") {
  CHECK_THROWS_AS(run_identity("NO_SUCH_ID"), UnknownIdentity);
  CHECK_THROWS_AS(run_identity("FOATA", 10), BoundExceeded);
  const auto r = run_identity("ANXBNX", 4);
  CHECK(r.range == "n=0..4");
  CHECK(r.status == "pass");
  CHECK(r.witness.is_null());
  CHECK(run_identity("ODD_CEX").range == "case=0..0");
  CHECK(run_identity("ND_ALT", 1).range == "n: empty");
}

TEST_CASE("run_all clamps bounds and is thread-independent") {
  RunAllOptions serial;
  serial.bound = 5;
  RunAllOptions threaded = serial;
  threaded.threads = 4;
  const auto a = run_all(serial);
  const auto b = run_all(threaded);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].to_json() == b[i].to_json());
  RunAllOptions big;
  big.bound = 1000;
  big.threads = 4;
  for (const auto& r : run_all(big)) {
    if (r.id == "FOATA") CHECK(r.range == "n=1..9");
    if (r.id == "ODD_CEX") CHECK(r.range == "case=0..0");
  }
}

TEST_CASE("enumeration cap limits only enumerative checks") {
  VerifyContext ctx;
  ctx.enumeration_cap = 4;
  CHECK(run_identity("DES_ORACLE", ctx).range == "n=1..4");
  CHECK(run_identity("ANXBNX", ctx).range == "n=0..10");
}

TEST_CASE("report JSON shape") {
  const Json j = run_identity("CUBE", 2).to_json();
  CHECK(j.dump() == R"({"id":"CUBE","range":"n=0..2","status":"pass","witness":null})");
}

TEST_CASE("negative control: corrupting A_5 breaks several identities") {
  const CorruptedA5 corrupted;
  VerifyContext ctx;
  ctx.provider = &corrupted;
  std::set<std::string> failed;
  for (const auto& r : run_all({}, ctx)) {
    if (!r.failed()) continue;
    failed.insert(r.id);
    CHECK(r.witness.is_object());
    CHECK(r.witness.contains("detail"));
    CHECK(r.witness["params"].is_object());
  }
  CHECK(failed.size() >= 3);
  CHECK(failed.count("ANXBNX") == 1);
  CHECK(failed.count("DES_ORACLE") == 1);
  CHECK(failed.count("STEMBRIDGE") == 1);
  const auto r = run_identity("ANXBNX", ctx);
  CHECK(r.witness["params"]["n"] == 5);
  CHECK(r.witness["difference"].is_array());
}

TEST_CASE("Boros-Moll conjecture checker") {
  const auto r = conjecture_boros_moll(20);
  CHECK(r.status == "holds-to-bound");
  CHECK(r.range == "m=1..20");
  CHECK_FALSE(r.failed());
  CHECK_THROWS_AS(conjecture_boros_moll(kBorosMollMax + 1), BoundExceeded);
}

TEST_CASE("des/exc conjecture checker") {
  const auto r = conjecture_des_exc(8, {Scalar(1), Scalar(3, 2), Scalar(2)});
  CHECK(r.status == "holds-to-bound");
  CHECK_THROWS_AS(conjecture_des_exc(kDesExcMax + 1, {Scalar(1)}), BoundExceeded);
  CHECK_THROWS_AS(conjecture_des_exc(3, {Scalar(1, 2)}), std::invalid_argument);
  // printed symmetric parts
  CHECK(des_exc_symmetric_part(3) == BiPoly{UniPoly{1}, UniPoly{1, 2, 1}, UniPoly{1}});
  CHECK(des_exc_symmetric_part(4) == BiPoly{UniPoly{1}, UniPoly{1, 5, 5}, UniPoly{1, 5, 5}, UniPoly{1}});
}

TEST_CASE("des/exc checker reports a failing witness") {
  class Skewed : public FamilyProvider {
   public:
    BiPoly bivariate(long n) const override {
      BiPoly f = biv_des_exc(n);
      if (n != 3) return f;
      return f + BiPoly{UniPoly{0, 1}};  // breaks t-symmetry of a_3
    }
  };
  const Skewed skewed;
  VerifyContext ctx;
  ctx.provider = &skewed;
  const auto r = conjecture_des_exc(4, {Scalar(1)}, ctx);
  CHECK(r.status == "fail");
  CHECK(r.witness["params"]["n"] == 3);
}
