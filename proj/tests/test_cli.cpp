#include <gammalab/cli.hpp>

#include <doctest.h>

#include <cstdlib>
#include <sstream>

using namespace gammalab;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_CASE("family command") {
  const Run r = run({"family", "eulerian_a", "--n", "6"});
  CHECK(r.code == 0);
  CHECK(r.out == "1 57 302 302 57 1\n");
  CHECK(run({"--json", "family", "peak", "--n", "3"}).out == "[\"4\",\"2\"]\n");
  CHECK(run({"family", "peak", "--n", "3", "--json"}).out == "[\"4\",\"2\"]\n");
  CHECK(run({"family", "biv_des_exc", "--n", "2", "--json"}).out == "{\"t_coeffs\":[[\"1\"],[\"0\",\"1\"]]}\n");
  CHECK(run({"family", "boros_moll", "--n", "1"}).out == "3/2 1\n");
  CHECK(run({"family", "nope", "--n", "1"}).code == 2);
  CHECK(run({"family", "peak", "--n", "0"}).code == 2);
}

TEST_CASE("expand command") {
  const Run r = run({"expand", "--basis", "alt-gamma", "--poly", "1 0 2 0 1", "--center", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "n=4 sign=- coeffs: 1 4 4\n");
  CHECK(run({"--json", "expand", "--basis", "gamma", "--family", "eulerian_a", "--n", "4"}).out ==
        "{\"coeffs\":[\"1\",\"8\"],\"n\":3,\"sign\":\"+\"}\n");
  const Run prof = run({"--json", "expand", "--basis", "profile", "--poly", "1 4 1"});
  CHECK(prof.out.find("\"gamma_positive\":\"yes\"") != std::string::npos);
  CHECK(run({"expand", "--basis", "gamma", "--poly", "1 2 3"}).code == 2);
  CHECK(run({"expand", "--basis", "wrong", "--poly", "1"}).code == 2);
  CHECK(run({"expand", "--basis", "gamma"}).code == 2);
  CHECK(run({"expand", "--basis", "gamma", "--poly", "1 1", "--family", "peak", "--n", "2"}).code == 2);
}

TEST_CASE("oracle commands") {
  CHECK(run({"oracle", "stats", "--n", "4", "--weight", "des"}).out == "1 11 11 1\n");
  CHECK(run({"oracle", "stats", "--n", "4", "--weight", "gamma"}).out == "1 8\n");
  CHECK(run({"--threads", "3", "oracle", "stats", "--n", "7", "--weight", "pk"}).out ==
        run({"oracle", "stats", "--n", "7", "--weight", "pk"}).out);
  CHECK(run({"oracle", "stats", "--n", "4", "--weight", "bogus"}).code == 2);
  CHECK(run({"oracle", "stats", "--n", "12", "--weight", "des"}).code == 2);
  const Run orbit = run({"--json", "oracle", "orbit", "--perm", "3,1,2"});
  CHECK(orbit.code == 0);
  CHECK(orbit.out.find("\"des_poly\":[\"1\",\"2\",\"1\"]") != std::string::npos);
  CHECK(run({"oracle", "orbit", "--perm", "1,1"}).code == 2);
  CHECK(run({"oracle"}).code == 2);
}

TEST_CASE("stability command") {
  const Run r = run({"--json", "stability", "--family", "mn-combination", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"status\":\"stable\"") != std::string::npos);
  CHECK(run({"stability", "--poly", "1 -1"}).out.rfind("unstable", 0) == 0);
  CHECK(run({"stability", "--poly", "0"}).code == 2);
  CHECK(run({"stability"}).code == 2);
}

TEST_CASE("verify command") {
  const Run r = run({"verify", "CUBE", "--bound", "3", "--json"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"id\":\"CUBE\",\"range\":\"n=0..3\",\"status\":\"pass\",\"witness\":null}\n");
  CHECK(run({"verify", "FOATA", "--bound", "99"}).code == 2);
  CHECK(run({"verify", "UNKNOWN"}).code == 2);
  const Run all = run({"--threads", "4", "verify", "all", "--bound", "4"});
  CHECK(all.code == 0);
  CHECK(all.out.find("ABREC  n=1..4  pass") != std::string::npos);
}

TEST_CASE("conjecture commands") {
  const Run bm = run({"conjecture", "boros-moll", "--max-m", "6"});
  CHECK(bm.code == 0);
  CHECK(bm.out == "CONJ_BOROS_MOLL  m=1..6  holds-to-bound\n");
  CHECK(run({"conjecture", "des-exc", "--max-n", "5", "--s", "1", "--s", "3/2"}).code == 0);
  CHECK(run({"conjecture", "des-exc", "--max-n", "99"}).code == 2);
  CHECK(run({"conjecture", "des-exc", "--s", "1/3"}).code == 2);
}

TEST_CASE("usage errors name the flag and print a synopsis") {
  const Run r = run({"family", "eulerian_a", "--n", "3", "--bogus"});
  CHECK(r.code == 2);
  CHECK(r.err.find("--bogus") != std::string::npos);
  CHECK(r.err.find("usage:") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("JSON output is byte-stable") {
  const std::vector<std::string> args{"--json", "verify", "all", "--bound", "3", "--threads", "2"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("GAMMALAB_MAX_N caps enumeration") {
  setenv("GAMMALAB_MAX_N", "5", 1);
  CHECK(run({"oracle", "stats", "--n", "6", "--weight", "des"}).code == 2);
  CHECK(run({"oracle", "stats", "--n", "5", "--weight", "des"}).code == 0);
  CHECK(run({"verify", "DES_ORACLE"}).out == "DES_ORACLE  n=1..5  pass\n");
  setenv("GAMMALAB_MAX_N", "x", 1);
  CHECK(run({"family", "peak", "--n", "3"}).code == 2);
  unsetenv("GAMMALAB_MAX_N");
}
