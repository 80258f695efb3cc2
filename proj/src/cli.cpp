#include <gammalab/cli.hpp>
#include <gammalab/gamma.hpp>
#include <gammalab/stability.hpp>
#include <gammalab/verify.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <ostream>
#include <algorithm>

namespace gammalab {

namespace {

constexpr const char* kSynopsis =
    "usage: gammalab [--json] [--threads K] <command> ...\n"
    "  family <name> --n N\n"
    "  expand --basis <basis> (--poly \"c0 c1 ...\" | --family <name> --n N) [--center N]\n"
    "  oracle stats --n N --weight <weight>\n"
    "  oracle orbit --perm \"3,1,2\"\n"
    "  stability (--poly \"c0 c1 ...\" | --family mn-combination --n N)\n"
    "  verify <id|all> [--bound N]\n"
    "  conjecture boros-moll [--max-m M]\n"
    "  conjecture des-exc [--max-n N] [--s S ...]\n";

/// Thrown for bad flag combinations that CLI11 cannot express.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::vector<std::string> kBases{"gamma",    "alt-gamma",      "binomial-plus", "binomial-minus",
                                      "eta",      "xi",             "semi-gamma",    "alt-semi-gamma",
                                      "symmetric", "hermite-biehler", "profile"};

const std::vector<std::pair<std::string, Weight>> kWeights{
    {"des", Weight::des},
    {"pk", Weight::pk},
    {"lpk", Weight::lpk},
    {"pk-plus-des", Weight::pk_plus_des},
    {"complement-dasc", Weight::complement_dasc},
    {"beta", Weight::beta},
    {"two-des", Weight::two_des},
};

Json poly_json(const UniPoly& f) { return to_string_list(f); }

Json bipoly_json(const BiPoly& f) {
  Json rows = Json::array();
  for (const auto& c : f.coeffs()) rows.push_back(poly_json(c));
  return Json{{"t_coeffs", rows}};
}

std::string bipoly_text(const BiPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t k = 0; k < f.size(); ++k) {
    out += "t^" + std::to_string(k) + ": " + to_text(f.coeffs()[k]) + "\n";
  }
  return out.substr(0, out.size() - 1);
}

std::string vec_text(const std::vector<Scalar>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + to_string(v[i]);
  return out;
}

Json expansion_json(long n, BasisSign sign, const std::vector<Scalar>& coeffs) {
  return Json{{"n", n}, {"sign", to_string(sign)}, {"coeffs", to_string_list(coeffs)}};
}

struct Session {
  std::ostream& out;
  bool json = false;
  unsigned threads = 1;
  std::optional<long> max_n;  // GAMMALAB_MAX_N

  EnumOptions enumeration() const {
    EnumOptions opts;
    opts.threads = threads;
    if (max_n) opts.bound = std::min(opts.bound, *max_n);
    return opts;
  }

  void emit(const Json& j, const std::string& text) const {
    if (json) {
      out << j.dump() << "\n";
    } else {
      out << text << "\n";
    }
  }
};

FamilyId parse_family(const std::string& name) {
  std::string key = name;
  std::replace(key.begin(), key.end(), '-', '_');
  const auto id = family_from_name(key);
  if (!id) throw UsageError("unknown family '" + name + "'");
  return *id;
}

void require_cap(const Session& s, long n, long builtin) {
  const long cap = s.max_n ? std::min(*s.max_n, builtin) : builtin;
  if (n > cap) throw BoundExceeded("n = " + std::to_string(n) + " exceeds the enumeration bound " + std::to_string(cap));
}

// ---------------------------------------------------------------------------

int cmd_family(const Session& s, const std::string& name, long n) {
  const FamilyId id = parse_family(name);
  if (id == FamilyId::BIV_DES_EXC) {
    require_cap(s, n, kDefaultBivBound);
    const BiPoly f = biv_des_exc(n);
    s.emit(bipoly_json(f), bipoly_text(f));
    return kExitOk;
  }
  const UniPoly f = family(id, n);
  s.emit(poly_json(f), to_text(f));
  return kExitOk;
}

UniPoly input_poly(const std::string& poly, const std::string& fam, std::optional<long> n) {
  if (!poly.empty() && !fam.empty()) throw UsageError("--poly and --family are mutually exclusive");
  if (!poly.empty()) return parse_poly(poly);
  if (fam.empty()) throw UsageError("one of --poly or --family is required");
  if (!n) throw UsageError("--family needs --n");
  if (fam == "mn-combination" || fam == "mn_combination") return mn_combination(*n);
  const FamilyId id = parse_family(fam);
  if (id == FamilyId::BIV_DES_EXC) throw UsageError("bivariate family is not accepted here");
  return family(id, *n);
}

long default_center(const UniPoly& f) { return f.is_zero() ? 0 : f.degree_or(0); }

int cmd_expand(const Session& s, const std::string& basis, const UniPoly& f, std::optional<long> center_opt) {
  const long n = center_opt.value_or(default_center(f));
  if (basis == "gamma" || basis == "alt-gamma") {
    const auto g = basis == "gamma" ? gamma_expand(f, n) : alt_gamma_expand(f, n);
    s.emit(expansion_json(g.center_degree, g.sign, g.coeffs), "n=" + std::to_string(g.center_degree) + " sign=" +
                                                                  to_string(g.sign) + " coeffs: " + vec_text(g.coeffs));
  } else if (basis == "binomial-plus" || basis == "binomial-minus") {
    const auto e = binomial_basis_expand(f, n, basis == "binomial-plus" ? BasisSign::plus : BasisSign::minus);
    s.emit(expansion_json(e.degree, e.sign, e.coeffs),
           "n=" + std::to_string(e.degree) + " sign=" + to_string(e.sign) + " coeffs: " + vec_text(e.coeffs));
  } else if (basis == "eta" || basis == "xi") {
    const auto g = gamma_expand(f, n);
    const auto v = basis == "eta" ? eta_from_gamma(g) : xi_from_gamma(g);
    s.emit(Json{{"n", n}, {basis, to_string_list(v)}}, basis + ": " + vec_text(v));
  } else if (basis == "semi-gamma") {
    const auto d = semi_gamma_decompose(f);
    s.emit(Json{{"nu", d.nu}, {"n", d.n}, {"lambda", to_string_list(d.lambda)}, {"f1", poly_json(d.f1)}, {"f2", poly_json(d.f2)}},
           "nu=" + std::to_string(d.nu) + " n=" + std::to_string(d.n) + "\nlambda: " + vec_text(d.lambda) +
               "\nf1: " + to_text(d.f1) + "\nf2: " + to_text(d.f2));
  } else if (basis == "alt-semi-gamma") {
    const auto d = alt_semi_gamma_decompose(f);
    s.emit(Json{{"nu", d.nu}, {"n", d.n}, {"xi", to_string_list(d.xi)}, {"zeta", to_string_list(d.zeta)}},
           "nu=" + std::to_string(d.nu) + " n=" + std::to_string(d.n) + "\nxi: " + vec_text(d.xi) + "\nzeta: " + vec_text(d.zeta));
  } else if (basis == "symmetric") {
    const auto d = symmetric_decomposition(f, n);
    s.emit(Json{{"n", n}, {"a", poly_json(d.a)}, {"b", poly_json(d.b)}},
           "n=" + std::to_string(n) + "\na: " + to_text(d.a) + "\nb: " + to_text(d.b));
  } else if (basis == "hermite-biehler") {
    const auto d = hermite_biehler_split(f);
    s.emit(Json{{"even", poly_json(d.even)}, {"odd", poly_json(d.odd)}}, "even: " + to_text(d.even) + "\nodd: " + to_text(d.odd));
  } else {  // profile
    const auto p = classify(f, n);
    const std::vector<std::pair<std::string, Flag>> rows{
        {"symmetric", p.symmetric},
        {"unimodal", p.unimodal},
        {"gamma_positive", p.gamma_positive},
        {"alt_gamma_positive", p.alt_gamma_positive},
        {"semi_gamma_positive", p.semi_gamma_positive},
        {"alt_semi_gamma_positive", p.alt_semi_gamma_positive},
        {"bi_gamma_positive", p.bi_gamma_positive},
        {"alt_bi_gamma_positive", p.alt_bi_gamma_positive},
    };
    Json j{{"n", n}};
    std::string text = "n=" + std::to_string(n);
    for (const auto& [key, flag] : rows) {
      j[key] = to_string(flag);
      text += "\n" + key + ": " + to_string(flag);
    }
    s.emit(j, text);
  }
  return kExitOk;
}

int cmd_oracle_stats(const Session& s, long n, const std::string& weight) {
  const EnumOptions opts = s.enumeration();
  if (weight == "des-exc") {
    const BiPoly f = des_exc_polynomial(n, opts);
    s.emit(bipoly_json(f), bipoly_text(f));
    return kExitOk;
  }
  if (weight == "gamma") {
    const auto v = gamma_count(n, opts);
    s.emit(to_string_list(v), vec_text(v));
    return kExitOk;
  }
  for (const auto& [name, w] : kWeights) {
    if (name == weight) {
      const UniPoly f = stat_polynomial(n, w, opts);
      s.emit(poly_json(f), to_text(f));
      return kExitOk;
    }
  }
  throw UsageError("unknown weight '" + weight + "'");
}

int cmd_oracle_orbit(const Session& s, const std::string& perm) {
  const PermWord pi = parse_perm(perm);
  validate_perm(pi);
  require_cap(s, static_cast<long>(pi.size()), EnumOptions{}.bound);
  const auto orbit = mfs_orbit(pi, s.enumeration().bound);
  Json members = Json::array();
  std::string text;
  UniPoly des_poly;
  for (const auto& sigma : orbit) {
    const StatRecord r = perm_stats(sigma);
    members.push_back(Json{{"perm", perm_to_string(sigma)}, {"des", r.des}, {"pk", r.pk}, {"ddes", r.ddes}});
    text += perm_to_string(sigma) + "  des=" + std::to_string(r.des) + " pk=" + std::to_string(r.pk) + "\n";
    des_poly += UniPoly::monomial(Scalar(1), static_cast<std::size_t>(r.des));
  }
  text += "descent polynomial: " + to_text(des_poly);
  s.emit(Json{{"orbit", members}, {"des_poly", poly_json(des_poly)}}, text);
  return kExitOk;
}

int cmd_stability(const Session& s, const UniPoly& f) {
  const auto v = hurwitz_classify(f);
  s.emit(Json{{"status", to_string(v.status)}, {"certificate", v.certificate}}, to_string(v.status) + ": " + v.certificate);
  return kExitOk;
}

std::string report_text(const VerificationReport& r) {
  std::string line = r.id + "  " + r.range + "  " + r.status;
  if (r.failed()) line += "\n  witness: " + r.witness.dump();
  return line;
}

int cmd_verify(const Session& s, const std::string& target, std::optional<long> bound) {
  VerifyContext ctx;
  ctx.enumeration = s.enumeration();
  ctx.enumeration_cap = s.max_n;
  std::vector<VerificationReport> reports;
  if (target == "all") {
    reports = run_all(RunAllOptions{bound, s.threads}, ctx);
  } else {
    reports.push_back(bound ? run_identity(target, *bound, ctx) : run_identity(target, ctx));
  }
  bool failed = false;
  Json arr = Json::array();
  std::string text;
  for (const auto& r : reports) {
    failed = failed || r.failed();
    arr.push_back(r.to_json());
    text += (text.empty() ? "" : "\n") + report_text(r);
  }
  s.emit(target == "all" ? arr : arr.front(), text);
  return failed ? kExitCheckFailed : kExitOk;
}

int emit_report(const Session& s, const VerificationReport& r) {
  s.emit(r.to_json(), report_text(r));
  return r.failed() ? kExitCheckFailed : kExitOk;
}

std::optional<long> env_max_n() {
  const char* raw = std::getenv("GAMMALAB_MAX_N");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const long v = std::stol(raw, &used);
    if (used == std::string(raw).size() && v >= 0) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("GAMMALAB_MAX_N must be a nonnegative integer, got '") + raw + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact gamma-positivity toolkit", "gammalab"};
  app.fallthrough();
  app.require_subcommand(1);

  Session session{out, false, 1, std::nullopt};
  app.add_flag("--json", session.json, "Canonical JSON output");
  app.add_option("--threads", session.threads, "Worker threads for enumeration and verify all")->check(CLI::Range(1u, 256u));

  std::string fam_name, basis, poly, fam_opt, perm, weight, target;
  long n = 0;
  std::optional<long> n_opt, center, bound;
  long max_m = 20, max_n = 8;
  std::vector<std::string> s_values;

  auto* family_cmd = app.add_subcommand("family", "Print a family member");
  family_cmd->add_option("name", fam_name, "Family name, e.g. eulerian_a")->required();
  family_cmd->add_option("--n", n, "Index")->required();

  auto* expand_cmd = app.add_subcommand("expand", "Expand a polynomial in a basis");
  expand_cmd->add_option("--basis", basis, "Basis")->required()->check(CLI::IsMember(kBases));
  expand_cmd->add_option("--poly", poly, "Coefficients low to high");
  expand_cmd->add_option("--family", fam_opt, "Family name");
  expand_cmd->add_option("--n", n_opt, "Family index");
  expand_cmd->add_option("--center", center, "Center of symmetry (default: degree)");

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force permutation oracles");
  oracle_cmd->require_subcommand(1);
  auto* stats_cmd = oracle_cmd->add_subcommand("stats", "Statistic polynomial over S_n");
  stats_cmd->add_option("--n", n, "Permutation length")->required();
  stats_cmd->add_option("--weight", weight,
                        "des, pk, lpk, pk-plus-des, complement-dasc, beta, two-des, des-exc or gamma")
      ->required();
  auto* orbit_cmd = oracle_cmd->add_subcommand("orbit", "Orbit of a permutation under the MFS action");
  orbit_cmd->add_option("--perm", perm, "Permutation, e.g. \"3,1,2\"")->required();

  auto* stab_cmd = app.add_subcommand("stability", "Hurwitz stability via the Hermite-Biehler split");
  stab_cmd->add_option("--poly", poly, "Coefficients low to high");
  stab_cmd->add_option("--family", fam_opt, "Family name or mn-combination");
  stab_cmd->add_option("--n", n_opt, "Family index");

  auto* verify_cmd = app.add_subcommand("verify", "Run registered identity checks");
  verify_cmd->add_option("id", target, "Identity id or 'all'")->required();
  verify_cmd->add_option("--bound", bound, "Largest parameter value")->check(CLI::NonNegativeNumber);

  auto* conj_cmd = app.add_subcommand("conjecture", "Bounded conjecture checkers");
  conj_cmd->require_subcommand(1);
  auto* bm_cmd = conj_cmd->add_subcommand("boros-moll", "Symmetric decomposition of Q_m");
  bm_cmd->add_option("--max-m", max_m, "Largest m")->check(CLI::PositiveNumber);
  auto* de_cmd = conj_cmd->add_subcommand("des-exc", "Symmetric parts of A_n(s,t)");
  de_cmd->add_option("--max-n", max_n, "Largest n")->check(CLI::PositiveNumber);
  de_cmd->add_option("--s", s_values, "Sample value of s (repeatable)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << kSynopsis;
    return kExitUsage;
  }

  try {
    session.max_n = env_max_n();
    if (family_cmd->parsed()) return cmd_family(session, fam_name, n);
    if (expand_cmd->parsed()) return cmd_expand(session, basis, input_poly(poly, fam_opt, n_opt), center);
    if (stats_cmd->parsed()) return cmd_oracle_stats(session, n, weight);
    if (orbit_cmd->parsed()) return cmd_oracle_orbit(session, perm);
    if (stab_cmd->parsed()) return cmd_stability(session, input_poly(poly, fam_opt, n_opt));
    if (verify_cmd->parsed()) return cmd_verify(session, target, bound);
    if (bm_cmd->parsed()) return emit_report(session, conjecture_boros_moll(max_m));
    if (de_cmd->parsed()) {
      std::vector<Scalar> samples;
      for (const auto& v : s_values) samples.push_back(parse_scalar(v));
      if (samples.empty()) samples = {Scalar(1), Scalar(3, 2), Scalar(2)};
      VerifyContext ctx;
      ctx.enumeration = session.enumeration();
      if (session.max_n && max_n > *session.max_n) {
        throw BoundExceeded("max-n " + std::to_string(max_n) + " exceeds GAMMALAB_MAX_N = " + std::to_string(*session.max_n));
      }
      return emit_report(session, conjecture_des_exc(max_n, samples, ctx));
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << kSynopsis;
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << kSynopsis;
  return kExitUsage;
}

}  // namespace gammalab
