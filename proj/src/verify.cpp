#include <gammalab/gamma.hpp>
#include <gammalab/random_poly.hpp>
#include <gammalab/ratfun.hpp>
#include <gammalab/stability.hpp>
#include <gammalab/verify.hpp>

#include <algorithm>
#include <atomic>
#include <thread>

namespace gammalab {

namespace {

using Witness = std::optional<Json>;

// ---------------------------------------------------------------------------
// Small polynomial vocabulary

UniPoly X() { return UniPoly{0, 1}; }
UniPoly one_plus_x(long k) { return linear_power(Scalar(1), Scalar(1), k); }
UniPoly one_minus_x(long k) { return linear_power(Scalar(1), Scalar(-1), k); }
UniPoly one_plus_2x(long k) { return linear_power(Scalar(1), Scalar(2), k); }
UniPoly mono(long k, const Scalar& c = Scalar(1)) { return UniPoly::monomial(c, static_cast<std::size_t>(k)); }
UniPoly neg_x_pow(long k) { return mono(k, Scalar(k % 2 == 0 ? 1 : -1)); }
UniPoly sq(const UniPoly& f) { return power_substitute(f, 2); }
UniPoly c(const Scalar& v) { return UniPoly::constant(v); }

Scalar binom(long n, long k) { return Scalar(binomial(n, k)); }
Scalar cat(long n) { return Scalar(catalan(n)); }
Scalar fact(long n) { return Scalar(factorial(n)); }
Scalar pow2(long n) { return power(Scalar(2), n); }
Scalar sign(long k) { return Scalar(k % 2 == 0 ? 1 : -1); }

/// (1 - x^2)^k
UniPoly one_minus_x2(long k) { return sq(one_minus_x(k)); }

std::vector<Scalar> pad(std::vector<Scalar> v, std::size_t size) {
  v.resize(std::max(size, v.size()), Scalar(0));
  return v;
}

/// sum_k coeffs[k] * basis(k)
template <class Basis>
UniPoly expand(const std::vector<Scalar>& coeffs, Basis basis) {
  UniPoly out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (!is_zero(coeffs[k])) out += basis(static_cast<long>(k)) * coeffs[k];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Witness builders

Json poly_json(const UniPoly& f) { return to_string_list(f); }

Json bipoly_json(const BiPoly& f) {
  Json out = Json::array();
  for (const auto& coeff : f.coeffs()) out.push_back(poly_json(coeff));
  return out;
}

Witness same(const UniPoly& lhs, const UniPoly& rhs, const std::string& what) {
  if (lhs == rhs) return std::nullopt;
  return Json{{"detail", what}, {"difference", poly_json(lhs - rhs)}};
}

Witness same(const BiPoly& lhs, const BiPoly& rhs, const std::string& what) {
  if (lhs == rhs) return std::nullopt;
  return Json{{"detail", what}, {"difference", bipoly_json(lhs - rhs)}};
}

Witness same(const RatFun& lhs, const RatFun& rhs, const std::string& what) {
  if (lhs == rhs) return std::nullopt;
  return Json{{"detail", what}, {"difference", to_text(lhs - rhs)}};
}

Witness same(const std::vector<Scalar>& lhs, const std::vector<Scalar>& rhs, const std::string& what) {
  const std::size_t size = std::max(lhs.size(), rhs.size());
  const auto a = pad(lhs, size);
  const auto b = pad(rhs, size);
  if (a == b) return std::nullopt;
  std::vector<Scalar> diff;
  for (std::size_t i = 0; i < size; ++i) diff.push_back(a[i] - b[i]);
  return Json{{"detail", what}, {"difference", to_string_list(diff)}};
}

Witness same(const Scalar& lhs, const Scalar& rhs, const std::string& what) {
  if (lhs == rhs) return std::nullopt;
  return Json{{"detail", what}, {"difference", to_string(lhs - rhs)}};
}

Witness require(bool ok, const std::string& what) {
  if (ok) return std::nullopt;
  return Json{{"detail", what}};
}

Witness nonnegative(const std::vector<Scalar>& v, const std::string& what) {
  if (all_nonnegative(v)) return std::nullopt;
  return Json{{"detail", what + " has a negative entry"}, {"values", to_string_list(v)}};
}

bool integral(const std::vector<Scalar>& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.get_den() == 1; });
}

#define GL_CHECK(expr)              \
  do {                              \
    if (auto w_ = (expr)) return w_; \
  } while (false)

// ---------------------------------------------------------------------------
// Family access through the provider, so a corrupted provider is seen everywhere.

struct Fam {
  const FamilyProvider& p;

  UniPoly A(long n) const { return p.get(FamilyId::EULERIAN_A, n); }
  UniPoly B(long n) const { return p.get(FamilyId::EULERIAN_B, n); }
  UniPoly NA(long n) const { return p.get(FamilyId::NARAYANA_A, n); }
  UniPoly NB(long n) const { return p.get(FamilyId::NARAYANA_B, n); }
  UniPoly ND(long n) const { return p.get(FamilyId::NARAYANA_D, n); }
  UniPoly P(long n) const { return p.get(FamilyId::PEAK, n); }
  UniPoly Ph(long n) const { return p.get(FamilyId::LEFT_PEAK, n); }
  UniPoly L(long n) const { return p.get(FamilyId::L_POLY, n); }
  UniPoly Lh(long n) const { return p.get(FamilyId::LHAT_POLY, n); }
  UniPoly a(long n) const { return p.get(FamilyId::A_SMALL, n); }
  UniPoly b(long n) const { return p.get(FamilyId::B_SMALL, n); }
  UniPoly alpha(long n) const { return p.get(FamilyId::ALPHA, n); }
  UniPoly beta(long n) const { return p.get(FamilyId::BETA, n); }
  UniPoly F(long n) const { return p.get(FamilyId::FLAG_AP, n); }
  UniPoly M(long m) const { return p.get(FamilyId::BOROS_MOLL, m); }
  UniPoly Q(long m) const { return p.get(FamilyId::Q_POLY, m); }
  UniPoly Phi(long n) const { return p.get(FamilyId::CYCLOTOMIC, n); }

  /// N(B_n, x^2) + (n+1) x N(A_{n-1}, x^2)
  UniPoly MN(long n) const { return sq(NB(n)) + X() * sq(NA(n - 1)) * Scalar(n + 1); }
};

/// sum f_i x^{2i} (1+x)^{2n-2i}
UniPoly squared_frame(const UniPoly& f, long n) {
  return expand(f.coeffs(), [n](long i) { return mono(2 * i) * one_plus_x(2 * n - 2 * i); });
}

/// Seeded corpus used by the thm01-style checks: random inputs plus families of degree n.
std::vector<UniPoly> corpus(long n, const Fam& fam, bool gamma_positive_only) {
  PolySampler rng(0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(n * 7919 + (gamma_positive_only ? 1 : 0)));
  std::vector<UniPoly> out;
  for (int i = 0; i < 4; ++i) out.push_back(rng.gamma_positive(n, 20));
  if (!gamma_positive_only) {
    for (int i = 0; i < 3; ++i) out.push_back(rng.symmetric(n, 12, 3));
  }
  out.push_back(fam.A(n + 1));
  out.push_back(fam.NA(n));
  out.push_back(fam.NB(n));
  return out;
}

RatFun rf(const UniPoly& num, const UniPoly& den) { return RatFun(num, den); }

// ---------------------------------------------------------------------------
// Checks, grouped by topic. Each returns the first failure at parameter n.

Witness check_anxbnx(long n, const VerifyContext& ctx) {
  const Fam f{ctx.families()};
  const UniPoly A = f.A(n);
  return same(one_plus_x(n + 1) * A, sq(f.B(n)) + X() * sq(A) * pow2(n),
              "(1+x)^{n+1} A_n(x) vs B_n(x^2) + 2^n x A_n(x^2)");
}

Witness check_bdes_oracle(long n, const VerifyContext& ctx) {
  return same(signed_descent_polynomial(n), Fam{ctx.families()}.B(n), "signed-permutation descents vs B_n");
}

Witness check_foata(long n, const VerifyContext& ctx) {
  const Fam f{ctx.families()};
  const UniPoly A = f.A(n);
  const auto counted = gamma_count(n, ctx.enumeration);
  GL_CHECK(same(gamma_expand(A, n - 1).coeffs, counted, "gamma-vector of A_n vs #{pk=k, ddes=0}"));
  const GammaExpansion g{n - 1, counted, BasisSign::plus};
  return same(alt_gamma_expand(sq(A), 2 * n - 2).coeffs, eta_from_gamma(g),
              "alternating gamma-vector of A_n(x^2) vs the eta transform of the counted gamma-vector");
}

Witness check_mfs_orbit(long n, const VerifyContext& ctx) {
  UniPoly total;
  for (const auto& orbit : mfs_orbits(n, ctx.enumeration.bound)) {
    const long pk = perm_stats(orbit.front()).pk;
    UniPoly des_poly;
    long ddes_free = 0;
    for (const auto& sigma : orbit) {
      const StatRecord r = perm_stats(sigma);
      if (r.pk != pk) return Json{{"detail", "pk is not constant on an orbit"}, {"orbit_of", perm_to_string(orbit.front())}};
      if (r.ddes == 0) {
        ++ddes_free;
        if (r.des != pk) return Json{{"detail", "des of the double-descent-free member differs from pk"}};
      }
      des_poly += mono(r.des);
    }
    GL_CHECK(require(ddes_free == 1, "orbit of " + perm_to_string(orbit.front()) + " lacks a unique double-descent-free member"));
    if (auto w = same(des_poly, mono(pk) * one_plus_x(n - 1 - 2 * pk), "orbit descent polynomial vs x^pk (1+x)^{n-1-2pk}")) {
      (*w)["orbit_of"] = perm_to_string(orbit.front());
      return w;
    }
    total += des_poly;
  }
  return same(total, Fam{ctx.families()}.A(n), "sum over orbits vs A_n");
}

Witness check_mfs_orbit_sq(long n, const VerifyContext& ctx) {
  for (const auto& orbit : mfs_orbits(n, ctx.enumeration.bound)) {
    const long pk = perm_stats(orbit.front()).pk;
    UniPoly lhs;
    for (const auto& sigma : orbit) lhs += mono(2 * perm_stats(sigma).des);
    const long m = n - 1 - 2 * pk;
    UniPoly rhs;
    for (long i = 0; i <= m; ++i) {
      rhs += neg_x_pow(2 * pk + i) * one_plus_x(2 * n - 2 - 2 * (2 * pk + i)) * (binom(m, i) * pow2(i));
    }
    if (auto w = same(lhs, rhs, "orbit x^{2des} polynomial vs its alternating expansion")) {
      (*w)["orbit_of"] = perm_to_string(orbit.front());
      return w;
    }
  }
  return std::nullopt;
}

Witness check_mfs_involution(long n, const VerifyContext&) {
  Witness out;
  for_each_permutation(n, [&](const PermWord& pi) {
    if (out) return;
    for (int x = 1; x <= n; ++x) {
      if (mfs_phi(mfs_phi(pi, x), x) != pi) {
        out = Json{{"detail", "phi_x applied twice is not the identity"}, {"perm", perm_to_string(pi)}, {"x", x}};
        return;
      }
    }
  });
  return out;
}

BiPoly bi_p() { return BiPoly{UniPoly{0, 1}}; }             // s plays p
BiPoly bi_q() { return BiPoly{UniPoly{}, UniPoly{1}}; }     // t plays q

Witness check_pnqn(long n, const VerifyContext&) {
  const BiPoly p = bi_p(), q = bi_q();
  BiPoly rhs;
  for (long k = 0; 2 * k <= n; ++k) {
    const Scalar coef = sign(k) * Scalar(n) / Scalar(n - k) * binom(n - k, k);
    rhs += pow(p * q, static_cast<unsigned long>(k)) * pow(p + q, static_cast<unsigned long>(n - 2 * k)) * c(coef);
  }
  return same(pow(p, static_cast<unsigned long>(n)) + pow(q, static_cast<unsigned long>(n)), rhs,
              "p^n + q^n vs its alternating (pq, p+q) expansion");
}

Witness check_pnqn02(long n, const VerifyContext&) {
  const BiPoly p = bi_p(), q = bi_q();
  BiPoly lhs, rhs;
  for (long i = 0; i <= n; ++i) lhs += pow(p, static_cast<unsigned long>(i)) * pow(q, static_cast<unsigned long>(n - i));
  for (long k = 0; 2 * k <= n; ++k) {
    rhs += pow(p * q, static_cast<unsigned long>(k)) * pow(p + q, static_cast<unsigned long>(n - 2 * k)) *
           c(sign(k) * binom(n - k, k));
  }
  return same(lhs, rhs, "sum p^i q^{n-i} vs its alternating (pq, p+q) expansion");
}

Witness check_lucas(long n, const VerifyContext&) {
  const UniPoly s{1, 1}, t{0, -1};
  UniPoly prev, cur = c(1);  // {0}, {1}
  if (n == 0) cur = UniPoly();
  for (long k = 2; k <= n; ++k) {
    UniPoly next = s * cur + t * prev;
    prev = cur;
    cur = next;
  }
  UniPoly qint;
  for (long i = 0; i < n; ++i) qint += mono(i);
  GL_CHECK(same(cur, qint, "Lucas {n} at s=1+q, t=-q vs 1+q+...+q^{n-1}"));
  UniPoly next_int = qint + mono(n);
  std::vector<Scalar> expected;
  for (long k = 0; 2 * k <= n; ++k) expected.push_back(binom(n - k, k));
  return same(alt_gamma_expand(next_int, n).coeffs, expected, "alternating gamma-vector of [n+1]_q vs C(n-k,k)");
}

Witness check_cube(long n, const VerifyContext&) {
  std::vector<Scalar> expected;
  for (long k = 0; k <= n; ++k) expected.push_back(binom(n, k) * pow2(k));
  return same(alt_gamma_expand(pow(UniPoly{1, 0, 1}, static_cast<unsigned long>(n)), 2 * n).coeffs, expected,
              "alternating gamma-vector of (1+x^2)^n vs C(n,k) 2^k");
}

Witness check_ftoh(long n, const VerifyContext&) {
  UniPoly cross, simplex, hsimplex;
  for (long i = 0; i <= n; ++i) {
    cross += mono(i, binom(n, i) * pow2(i));
    simplex += mono(i, binom(n + 1, i));
    hsimplex += mono(i);
  }
  GL_CHECK(same(f_to_h(cross, n), one_plus_x(n), "h-polynomial of the cross-polytope boundary vs (1+x)^n"));
  return same(f_to_h(simplex, n), hsimplex, "h-polynomial of the simplex boundary vs 1+x+...+x^n");
}

Witness check_coker1(long n, const VerifyContext& ctx) {
  const UniPoly rhs = expand(std::vector<Scalar>(static_cast<std::size_t>(n / 2 + 1), Scalar(1)),
                             [n](long k) { return mono(k) * one_plus_x(n - 2 * k) * (cat(k) * binom(n, 2 * k)); });
  return same(Fam{ctx.families()}.NA(n), rhs, "N(A_n,x) vs sum C_k C(n,2k) x^k (1+x)^{n-2k}");
}

Witness check_coker2(long n, const VerifyContext& ctx) {
  UniPoly rhs;
  for (long k = 0; k <= n; ++k) rhs += mono(k) * one_plus_x(k) * (cat(k + 1) * binom(n, k));
  return same(squared_frame(Fam{ctx.families()}.NA(n), n), rhs,
              "sum N_k x^{2k}(1+x)^{2n-2k} vs sum C_{k+1} C(n,k) x^k (1+x)^k");
}

Witness check_riordan(long n, const VerifyContext& ctx) {
  UniPoly rhs;
  for (long k = 0; 2 * k <= n; ++k) rhs += mono(k) * one_plus_x(n - 2 * k) * (binom(n, 2 * k) * binom(2 * k, k));
  return same(Fam{ctx.families()}.NB(n), rhs, "N(B_n,x) vs sum C(n,2k) C(2k,k) x^k (1+x)^{n-2k}");
}

Witness check_cwz(long n, const VerifyContext& ctx) {
  UniPoly rhs;
  for (long k = 0; k <= n; ++k) rhs += mono(k) * one_plus_x(k) * (binom(n, k) * binom(2 * k, k));
  return same(squared_frame(Fam{ctx.families()}.NB(n), n), rhs,
              "sum C(n,k)^2 x^{2k}(1+x)^{2n-2k} vs sum C(n,k) C(2k,k) x^k (1+x)^k");
}

Witness check_na_alt(long n, const VerifyContext& ctx) {
  std::vector<Scalar> expected;
  for (long k = 0; k <= n; ++k) expected.push_back(cat(k + 1) * binom(n, k));
  const UniPoly f = sq(Fam{ctx.families()}.NA(n));
  GL_CHECK(same(f, expand(expected, [n](long k) { return neg_x_pow(k) * one_plus_x(2 * n - 2 * k); }),
                "N(A_n,x^2) vs sum C_{k+1} C(n,k) (-x)^k (1+x)^{2n-2k}"));
  return same(alt_gamma_expand(f, 2 * n).coeffs, expected, "alternating gamma-vector of N(A_n,x^2)");
}

Witness check_nb_alt(long n, const VerifyContext& ctx) {
  std::vector<Scalar> expected;
  for (long k = 0; k <= n; ++k) expected.push_back(binom(n, k) * binom(2 * k, k));
  const UniPoly f = sq(Fam{ctx.families()}.NB(n));
  GL_CHECK(same(f, expand(expected, [n](long k) { return neg_x_pow(k) * one_plus_x(2 * n - 2 * k); }),
                "N(B_n,x^2) vs sum C(n,k) C(2k,k) (-x)^k (1+x)^{2n-2k}"));
  return same(alt_gamma_expand(f, 2 * n).coeffs, expected, "alternating gamma-vector of N(B_n,x^2)");
}

Witness check_na_shift(long n, const VerifyContext& ctx) {
  UniPoly lhs;
  for (long k = 0; k <= n; ++k) lhs += mono(k, cat(k + 1) * binom(n, k));
  const auto gamma = gamma_expand(Fam{ctx.families()}.NA(n), n).coeffs;
  const UniPoly rhs = expand(gamma, [n](long k) { return mono(2 * k) * one_plus_2x(n - 2 * k); });
  return same(lhs, rhs, "sum C_{k+1} C(n,k) x^k vs sum gamma_k x^{2k} (1+2x)^{n-2k} over the gamma-vector of N(A_n,x)");
}

Witness check_nb_shift(long n, const VerifyContext& ctx) {
  UniPoly lhs;
  for (long k = 0; k <= n; ++k) lhs += mono(k, binom(n, k) * binom(2 * k, k));
  const auto gamma = gamma_expand(Fam{ctx.families()}.NB(n), n).coeffs;
  const UniPoly rhs = expand(gamma, [n](long k) { return mono(2 * k) * one_plus_2x(n - 2 * k); });
  return same(lhs, rhs, "sum C(n,k) C(2k,k) x^k vs sum gamma_k x^{2k} (1+2x)^{n-2k} over the gamma-vector of N(B_n,x)");
}

Witness check_nd_alt(long n, const VerifyContext& ctx) {
  const Fam f{ctx.families()};
  GL_CHECK(same(f.ND(n), f.NB(n) - X() * f.NA(n - 2) * Scalar(n), "N(D_n,x) vs N(B_n,x) - n x N(A_{n-2},x)"));
  std::vector<Scalar> expected{Scalar(1)};
  for (long i = 1; i <= n; ++i) expected.push_back(binom(n, i) * binom(2 * i, i) - Scalar(n) * cat(i - 1) * binom(n - 2, i - 2));
  const auto got = alt_gamma_expand(sq(f.ND(n)), 2 * n).coeffs;
  GL_CHECK(same(got, expected, "alternating gamma-vector of N(D_n,x^2)"));
  return nonnegative(got, "alternating gamma-vector of N(D_n,x^2)");
}

RatFun op(const RatFun& g, const RatFun& r, long n) { return apply_diff_operator(g, r, n); }
RatFun x_over_one_minus_x2() { return rf(UniPoly{0, 0, 1}, UniPoly{1, 0, -1}); }

Witness check_opid_a(long n, const VerifyContext& ctx) {
  return same(op(RatFun(X()), rf(c(1), one_minus_x(1)), n), rf(X() * Fam{ctx.families()}.A(n), one_minus_x(n + 1)),
              "(xD)^n 1/(1-x) vs x A_n(x)/(1-x)^{n+1}");
}

Witness check_opid_a2(long n, const VerifyContext& ctx) {
  return same(op(RatFun(X()), rf(c(1), one_minus_x2(1)), n),
              rf(mono(2) * sq(Fam{ctx.families()}.A(n)) * pow2(n), one_minus_x2(n + 1)),
              "(xD)^n 1/(1-x^2) vs 2^n x^2 A_n(x^2)/(1-x^2)^{n+1}");
}

Witness check_opid_b2(long n, const VerifyContext& ctx) {
  return same(op(RatFun(X()), rf(X(), one_minus_x2(1)), n), rf(X() * sq(Fam{ctx.families()}.B(n)), one_minus_x2(n + 1)),
              "(xD)^n x/(1-x^2) vs x B_n(x^2)/(1-x^2)^{n+1}");
}

Witness check_opid_na(long n, const VerifyContext& ctx) {
  return same(op(x_over_one_minus_x2(), rf(c(1), one_minus_x2(1)), n),
              rf(mono(n + 2, fact(n + 1)) * sq(Fam{ctx.families()}.NA(n - 1)), one_minus_x2(2 * n + 1)),
              "(x^2/(1-x^2) D)^n 1/(1-x^2) vs (n+1)! x^{n+2} N(A_{n-1},x^2)/(1-x^2)^{2n+1}");
}

Witness check_opid_nb(long n, const VerifyContext& ctx) {
  return same(op(x_over_one_minus_x2(), rf(X(), one_minus_x2(1)), n),
              rf(mono(n + 1, fact(n)) * sq(Fam{ctx.families()}.NB(n)), one_minus_x2(2 * n + 1)),
              "(x^2/(1-x^2) D)^n x/(1-x^2) vs n! x^{n+1} N(B_n,x^2)/(1-x^2)^{2n+1}");
}

Witness check_opid_mn(long n, const VerifyContext& ctx) {
  return same(op(x_over_one_minus_x2(), rf(c(1), one_minus_x(1)), n),
              rf(mono(n + 1, fact(n)) * Fam{ctx.families()}.MN(n), one_minus_x2(2 * n + 1)),
              "(x^2/(1-x^2) D)^n 1/(1-x) vs n! x^{n+1} (N(B_n,x^2) + (n+1) x N(A_{n-1},x^2))/(1-x^2)^{2n+1}");
}

Witness check_ln_recu(long n, const VerifyContext& ctx) {
  const Fam f{ctx.families()};
  const RatFun lhs = op(x_over_one_minus_x2(), rf(c(1), one_minus_x(1)), n);
  GL_CHECK(same(lhs, rf(mono(n + 1, fact(n)) * one_plus_x(2) * f.L(n), one_minus_x2(2 * n + 1)),
                "operator value vs n! x^{n+1} (1+x)^2 L_n(x)/(1-x^2)^{2n+1}"));
  return same(lhs, rf(mono(n + 1, fact(n)) * one_plus_x(1) * f.Lh(n), one_minus_x2(2 * n + 1)),
              "operator value vs n! x^{n+1} (1+x) Lhat_n(x)/(1-x^2)^{2n+1}");
}

Witness check_hat_recu(long n, const VerifyContext& ctx) {
  const Fam f{ctx.families()};
  auto Mhat = [&](long m, long k) -> Scalar { return k >= 0 ? fact(m) * f.NB(m)[static_cast<std::size_t>(k)] : Scalar(0); };
  auto Nhat = [&](long m, long k) -> Scalar {
    return k >= 1 ? fact(m + 1) * f.NA(m - 1)[static_cast<std::size_t>(k - 1)] : Scalar(0);
  };
  for (long k = 0; k <= n + 1; ++k) {
    GL_CHECK(same(Mhat(n + 1, k), Scalar(n + 1 + 2 * k) * Mhat(n, k) + Scalar(3 * n + 3 - 2 * k) * Mhat(n, k - 1),
                  "Mhat(n+1,k) recurrence at k = " + std::to_string(k)));
    GL_CHECK(same(Nhat(n + 1, k), Scalar(n + 2 * k) * Nhat(n, k) + Scalar(3 * n + 4 - 2 * k) * Nhat(n, k - 1),
                  "Nhat(n+1,k) recurrence at k = " + std::to_string(k)));
  }
  return std::nullopt;
}

Witness check_mn_gamma(long n, const VerifyContext& ctx) {
  std::vector<Scalar> expected{Scalar(1)};
  for (long k = 1; k <= n; ++k) {
    expected.push_back(binom(n, k) * binom(2 * k, k) - Scalar(n + 1) * cat(k) * binom(n - 1, k - 1));
  }
  const auto got = alt_gamma_expand(Fam{ctx.families()}.MN(n), 2 * n).coeffs;
  GL_CHECK(same(got, expected, "alternating gamma-vector of the MN polynomial"));
  GL_CHECK(nonnegative(got, "alternating gamma-vector of the MN polynomial"));
  return require(is_zero(got.at(static_cast<std::size_t>(n))), "entry k = n of the MN gamma-vector is not zero");
}

Witness check_mn_stable(long n, const VerifyContext& ctx) {
  const UniPoly f = Fam{ctx.families()}.MN(n);
  const auto verdict = hurwitz_classify(f);
  GL_CHECK(require(verdict.status == HurwitzStatus::stable, "Hermite-Biehler verdict " + to_string(verdict.status) + ": " + verdict.certificate));
  const auto routh = routh_stable(f);
  return require(routh == RouthResult::stable, "Routh verdict " + to_string(routh));
}

Witness check_mn_factor(long n, const VerifyContext& ctx) {
  const Fam f{ctx.families()};
  return same(exact_div(f.MN(n), one_plus_x(2)), f.L(n), "MN polynomial / (1+x)^2 vs L_n");
}

Witness check_mn_deriv(long n, const VerifyContext& ctx) {
  const Fam f{ctx.families()};
  const UniPoly mid = f.NB(n) + X() * f.NA(n - 1) * Scalar(n);
  GL_CHECK(same(derivative(X() * f.NA(n)), mid, "d/dx (x N(A_n,x)) vs N(B_n,x) + n x N(A_{n-1},x)"));
  return same(derivative(mid), f.NA(n - 1) * Scalar(n * (n + 1)),
              "d/dx (N(B_n,x) + n x N(A_{n-1},x)) vs n(n+1) N(A_{n-1},x)");
}

Witness check_mn_interlace(long n, const VerifyContext& ctx) {
  const Fam f{ctx.families()};
  const UniPoly p = f.NA(n - 1);
  const auto r1 = interlacing_relation(p, f.NB(n) + X() * p * Scalar(n));
  GL_CHECK(require(r1 == Interlacing::interlaces, "N(A_{n-1}) vs N(B_n) + n x N(A_{n-1}): " + to_string(r1)));
  const auto r2 = interlacing_relation(p, f.NB(n));
  return require(r2 == Interlacing::interlaces, "N(A_{n-1}) vs N(B_n): " + to_string(r2));
}

Witness check_hb_split(long n, const VerifyContext& ctx) {
  const Fam f{ctx.families()};
  std::vector<UniPoly> inputs{f.A(n), f.B(n), f.NB(n)};
  if (n >= 1) inputs.push_back(f.MN(n));
  for (const auto& g : inputs) {
    const auto split = hermite_biehler_split(g);
    GL_CHECK(same(sq(split.even) + X() * sq(split.odd), g, "f^E(x^2) + x f^O(x^2) vs f"));
  }
  return std::nullopt;
}

Witness check_ln_closed(long n, const VerifyContext& ctx) {
  const Fam f{ctx.families()};
  GL_CHECK(same(f.L(n), l_closed(n), "L_n recurrence vs closed form"));
  return same(f.Lh(n), lhat_closed(n), "Lhat_n recurrence vs closed form");
}

Witness check_ln_sum(long n, const VerifyContext& ctx) {
  const Fam f{ctx.families()};
  const Scalar l1 = eval(f.L(n), Scalar(1));
  GL_CHECK(same(l1 * 2, binom(2 * n, n), "2 L_n(1) vs C(2n,n)"));
  GL_CHECK(same(eval(f.Lh(n), Scalar(1)), binom(2 * n, n), "Lhat_n(1) vs C(2n,n)"));
  if (n >= 2) GL_CHECK(same(l1 * n, eval(f.L(n - 1), Scalar(1)) * (4 * n - 2), "n L_n(1) vs (4n-2) L_{n-1}(1)"));
  return std::nullopt;
}

/// 2^{1-n} sum 4^k P(n,k) x^k (1+x)^{n-1-2k}
Witness check_stembridge(long n, const VerifyContext& ctx) {
  const Fam f{ctx.families()};
  const UniPoly P = f.P(n);
  const UniPoly rhs = expand(P.coeffs(), [n](long k) { return mono(k, power(Scalar(4), k)) * one_plus_x(n - 1 - 2 * k); }) *
                      power(Scalar(2), 1 - n);
  return same(f.A(n), rhs, "A_n vs 2^{1-n} sum 4^k P(n,k) x^k (1+x)^{n-1-2k}");
}

Witness check_leftpeak_b(long n, const VerifyContext& ctx) {
  const Fam f{ctx.families()};
  const UniPoly rhs = expand(f.Ph(n).coeffs(), [n](long k) { return mono(k, power(Scalar(4), k)) * one_plus_x(n - 2 * k); });
  return same(f.B(n), rhs, "B_n vs sum 4^k Phat(n,k) x^k (1+x)^{n-2k}");
}

Witness check_thm51_i(long n, const VerifyContext& ctx) {
  const Fam f{ctx.families()};
  const auto ga = alt_gamma_expand(sq(f.A(n)), 2 * n - 2).coeffs;
  GL_CHECK(nonnegative(ga, "alternating gamma-vector of A_n(x^2)"));
  GL_CHECK(require(integral(ga), "alternating gamma-vector of A_n(x^2) is not integral"));
  GL_CHECK(same(ga, f.a(n).coeffs(), "a(n,k) from A_n(x^2) vs coefficients of a_n"));
  const auto gb = alt_gamma_expand(sq(f.B(n)), 2 * n).coeffs;
  GL_CHECK(nonnegative(gb, "alternating gamma-vector of B_n(x^2)"));
  GL_CHECK(require(integral(gb), "alternating gamma-vector of B_n(x^2) is not integral"));
  return same(gb, f.b(n).coeffs(), "b(n,k) from B_n(x^2) vs coefficients of b_n");
}

Witness check_thm51_ii(long n, const VerifyContext& ctx) {
  const Fam f{ctx.families()};
  auto rhs = [](const UniPoly& p) { return expand(p.coeffs(), [](long k) { return mono(k) * one_plus_x(k); }); };
  GL_CHECK(same(squared_frame(f.A(n), n - 1), rhs(f.a(n)), "sum A(n,k) x^{2k}(1+x)^{2n-2-2k} vs sum a(n,k) x^k (1+x)^k"));
  return same(squared_frame(f.B(n), n), rhs(f.b(n)), "sum B(n,k) x^{2k}(1+x)^{2n-2k} vs sum b(n,k) x^k (1+x)^k");
}

/// c^{k} p(r) as a rational function, where c and r are rational functions.
RatFun scaled_compose(const RatFun& scale, long k, const UniPoly& p, const RatFun& r) {
  return pow(scale, static_cast<unsigned long>(k)) * compose(p, r);
}

Witness check_thm51_iii(long n, const VerifyContext& ctx) {
  const Fam f{ctx.families()};
  GL_CHECK(same(f.a(n), a_closed(n), "a_n recurrence vs peak closed form"));
  GL_CHECK(same(f.b(n), b_closed(n), "b_n recurrence vs left-peak closed form"));
  const RatFun u = pow(rf(UniPoly{0, 2}, UniPoly{1, 2}), 2);  // (2x/(1+2x))^2
  GL_CHECK(same(RatFun(f.a(n)), scaled_compose(rf(UniPoly{1, 2}, c(2)), n - 1, f.P(n), u),
                "a_n vs ((1+2x)/2)^{n-1} P_n((2x/(1+2x))^2)"));
  return same(RatFun(f.b(n)), scaled_compose(RatFun(UniPoly{1, 2}), n, f.Ph(n), u),
              "b_n vs (1+2x)^n Phat_n((2x/(1+2x))^2)");
}

Witness check_thm51_iv(long n, const VerifyContext& ctx) {
  const Fam f{ctx.families()};
  const auto al = f.alpha(n).coeffs();
  const auto be = f.beta(n).coeffs();
  GL_CHECK(same(f.a(n), expand(al, [n](long i) { return mono(i) * one_plus_x(n - 1 - i); }),
                "a_n vs sum alpha(n,i) x^i (1+x)^{n-1-i}"));
  GL_CHECK(same(f.b(n), expand(be, [n](long i) { return mono(i) * one_plus_x(n - i); }),
                "b_n vs sum beta(n,i) x^i (1+x)^{n-i}"));
  const UniPoly pk_side = expand(f.P(n).coeffs(), [](long k) { return mono(2 * k, power(Scalar(4), k)); }) * power(Scalar(2), 1 - n);
  GL_CHECK(same(pk_side, expand(al, [n](long i) { return neg_x_pow(i) * one_plus_x(n - 1 - i); }),
                "2^{1-n} sum 4^k P(n,k) x^{2k} vs sum alpha(n,i) (-x)^i (1+x)^{n-1-i}"));
  const UniPoly lpk_side = expand(f.Ph(n).coeffs(), [](long k) { return mono(2 * k, power(Scalar(4), k)); });
  return same(lpk_side, expand(be, [n](long i) { return neg_x_pow(i) * one_plus_x(n - i); }),
              "sum 4^k Phat(n,k) x^{2k} vs sum beta(n,i) (-x)^i (1+x)^{n-i}");
}

Witness check_cor15(long n, const VerifyContext& ctx) {
  const Fam f{ctx.families()};
  GL_CHECK(same(f.alpha(n), alpha_closed(n), "alpha_n recurrence vs peak closed form"));
  GL_CHECK(same(f.beta(n), beta_closed(n), "beta_n recurrence vs left-peak closed form"));
  const RatFun u = pow(rf(UniPoly{0, 2}, UniPoly{1, 1}), 2);  // (2x/(1+x))^2
  GL_CHECK(same(RatFun(f.alpha(n)), scaled_compose(rf(UniPoly{1, 1}, c(2)), n - 1, f.P(n), u),
                "alpha_n vs ((1+x)/2)^{n-1} P_n((2x/(1+x))^2)"));
  return same(RatFun(f.beta(n)), scaled_compose(RatFun(UniPoly{1, 1}), n, f.Ph(n), u),
              "beta_n vs (1+x)^n Phat_n((2x/(1+x))^2)");
}

Witness check_abrec(long n, const VerifyContext&) {
  const Scalar half(1, 2);
  const UniPoly x = X();
  auto step = [](const UniPoly& p, const UniPoly& mult, const UniPoly& dmult) { return mult * p + dmult * derivative(p); };
  GL_CHECK(same(a_closed(n + 1), step(a_closed(n), UniPoly{1, Scalar(3 - n)}, UniPoly{0, half, 2}),
                "a_{n+1} vs (1+3x-nx) a_n + x(1+4x)/2 a_n'"));
  GL_CHECK(same(b_closed(n + 1), step(b_closed(n), UniPoly{1, Scalar(2 - 2 * n)}, UniPoly{0, 1, 4}),
                "b_{n+1} vs (1+2x-2nx) b_n + x(1+4x) b_n'"));
  const Scalar h = Scalar(n - 1) / 2;
  GL_CHECK(same(alpha_closed(n + 1), step(alpha_closed(n), UniPoly{1, 1 - h, 3 * h}, UniPoly{0, half, 1, Scalar(-3, 2)}),
                "alpha_{n+1} vs (1+x+(n-1)x(3x-1)/2) alpha_n + x(1-x)(1+3x)/2 alpha_n'"));
  return same(beta_closed(n + 1), step(beta_closed(n), UniPoly{1, Scalar(1 - n), Scalar(3 * n)}, UniPoly{0, 1, 2, -3}),
              "beta_{n+1} vs (1+x-nx+3nx^2) beta_n + x(1-x)(1+3x) beta_n'");
}

Witness check_specials(long n, const VerifyContext& ctx) {
  const Fam f{ctx.families()};
  const Scalar m1(-1), p1(1), four(4);
  GL_CHECK(same(eval(f.a(n), m1), sign(n - 1) * power(Scalar(2), 1 - n) * eval(f.P(n), four), "a_n(-1) vs (-1)^{n-1} 2^{1-n} P_n(4)"));
  GL_CHECK(same(eval(f.b(n), m1), sign(n) * eval(f.Ph(n), four), "b_n(-1) vs (-1)^n Phat_n(4)"));
  GL_CHECK(same(eval(f.alpha(n), p1), fact(n), "alpha_n(1) vs n!"));
  GL_CHECK(same(eval(f.beta(n), p1), pow2(n) * fact(n), "beta_n(1) vs 2^n n!"));
  GL_CHECK(same(eval(f.A(n), p1), fact(n), "A_n(1) vs n!"));
  GL_CHECK(same(eval(f.B(n), p1), pow2(n) * fact(n), "B_n(1) vs 2^n n!"));
  if (n == 1) {
    for (const auto& init : {f.a(1), f.alpha(1), f.b(0), f.beta(0)}) GL_CHECK(same(init, c(1), "initial condition"));
  }
  return std::nullopt;
}

Witness oracle_check(long n, const VerifyContext& ctx, Weight w, const UniPoly& expected, const std::string& what) {
  return same(stat_polynomial(n, w, ctx.enumeration), expected, what);
}

Witness check_des_oracle(long n, const VerifyContext& ctx) {
  return oracle_check(n, ctx, Weight::des, Fam{ctx.families()}.A(n), "sum x^des vs A_n");
}

Witness check_peak_oracle(long n, const VerifyContext& ctx) {
  return oracle_check(n, ctx, Weight::pk, Fam{ctx.families()}.P(n), "sum x^pk vs P_n");
}

Witness check_lpk_oracle(long n, const VerifyContext& ctx) {
  return oracle_check(n, ctx, Weight::lpk, Fam{ctx.families()}.Ph(n), "sum x^lpk vs Phat_n");
}

Witness check_alpha_oracle(long n, const VerifyContext& ctx) {
  const Fam f{ctx.families()};
  const UniPoly alpha = f.alpha(n);
  GL_CHECK(oracle_check(n, ctx, Weight::pk_plus_des, alpha, "sum x^{pk+des} vs alpha_n"));
  GL_CHECK(oracle_check(n, ctx, Weight::complement_dasc, alpha, "sum x^{n-1-dasc} vs alpha_n"));
  const auto gamma = gamma_expand(f.A(n), n - 1).coeffs;
  return same(reverse(alpha, n - 1), expand(gamma, [n](long k) { return one_plus_x(n - 1 - 2 * k); }),
              "x^{n-1} alpha_n(1/x) vs sum gamma_{n,k} (1+x)^{n-1-2k}");
}

Witness check_beta_oracle(long n, const VerifyContext& ctx) {
  return oracle_check(n, ctx, Weight::beta, Fam{ctx.families()}.beta(n), "sum (2x)^{2lpk}(1+x)^{n-2lpk} vs beta_n");
}

Witness check_fap_oracle(long n, const VerifyContext& ctx) {
  return same(fap_polynomial(n, kStirlingHardBound), Fam{ctx.families()}.F(n), "sum x^fap over Stirling permutations vs F_n");
}

Witness check_fn_conv(long n, const VerifyContext& ctx) {
  const Fam f{ctx.families()};
  UniPoly rhs;
  for (long k = 0; k <= n; ++k) rhs += f.F(k) * f.F(n - k) * binom(n, k);
  return same(X() * one_plus_x(n - 1) * f.A(n) * Scalar(2), rhs, "2x(1+x)^{n-1} A_n vs sum C(n,k) F_k F_{n-k}");
}

Witness check_fn_semi(long n, const VerifyContext& ctx) {
  const UniPoly F = Fam{ctx.families()}.F(n);
  const auto prof = classify(F, 2 * n);
  GL_CHECK(require(prof.symmetric == Flag::yes, "F_n is not symmetric about 2n"));
  GL_CHECK(require(prof.semi_gamma_positive == Flag::yes, "F_n is not semi-gamma-positive"));
  GL_CHECK(require(prof.alt_semi_gamma_positive == Flag::yes, "F_n is not alternatingly semi-gamma-positive"));
  if (n >= 2) GL_CHECK(require(prof.gamma_positive == Flag::no, "F_n is unexpectedly gamma-positive"));
  return std::nullopt;
}

Witness check_thm_fnx(long n, const VerifyContext& ctx) {
  const Fam f{ctx.families()};
  std::vector<std::pair<std::string, UniPoly>> inputs{{"B_n", f.B(n)}, {"N(A_n)", f.NA(n)}, {"N(B_n)", f.NB(n)}};
  if (n >= 1) inputs.emplace_back("A_n", f.A(n));
  for (const auto& [name, g] : inputs) {
    const auto d = alt_semi_gamma_decompose(g);
    GL_CHECK(nonnegative(d.xi, "xi of " + name));
    GL_CHECK(nonnegative(d.zeta, "zeta of " + name));
    GL_CHECK(same(reconstruct(d), g, "alternating semi-gamma reconstruction of " + name));
  }
  return std::nullopt;
}

Witness check_semi_examples(long, const VerifyContext& ctx) {
  const UniPoly A6 = Fam{ctx.families()}.A(6);
  const auto d6 = semi_gamma_decompose(A6);
  GL_CHECK(require(d6.nu == 1, "A_6 should split off one factor 1+x"));
  GL_CHECK(same(d6.f1, UniPoly{1, 246, 1}, "f1 of A_6"));
  GL_CHECK(same(d6.f2, UniPoly{56, 56}, "f2 of A_6"));
  const auto a6 = alt_semi_gamma_decompose(A6);
  GL_CHECK(same(a6.xi, {Scalar(1), Scalar(4), Scalar(248)}, "xi of A_6"));
  GL_CHECK(same(a6.zeta, {Scalar(56), Scalar(112)}, "zeta of A_6"));
  const UniPoly literal = one_plus_x(5) - X() * one_plus_x(3) * Scalar(4) + mono(2, 248) * one_plus_x(1) +
                          X() * (one_plus_x(3) * Scalar(56) - X() * one_plus_x(1) * Scalar(112));
  GL_CHECK(same(A6, literal, "A_6 vs its displayed alternating semi-gamma form"));

  const UniPoly g{1, 7, 29, 31, 29, 7, 1};
  GL_CHECK(same(gamma_expand(g, 6).coeffs, {Scalar(1), Scalar(1), Scalar(10), Scalar(-15)}, "gamma-vector of the second example"));
  const auto dg = semi_gamma_decompose(g);
  GL_CHECK(same(dg.lambda, {Scalar(1), Scalar(7), Scalar(26), Scalar(17)}, "lambda of the second example"));
  const auto ag = alt_semi_gamma_decompose(g);
  GL_CHECK(same(ag.xi, {Scalar(1), Scalar(6), Scalar(38), Scalar(60)}, "xi of the second example"));
  GL_CHECK(same(ag.zeta, {Scalar(7), Scalar(28), Scalar(45)}, "zeta of the second example"));
  const auto prof = classify(g, 6);
  GL_CHECK(require(prof.gamma_positive == Flag::no, "second example should not be gamma-positive"));
  GL_CHECK(require(prof.semi_gamma_positive == Flag::yes, "second example should be semi-gamma-positive"));
  return require(prof.alt_semi_gamma_positive == Flag::yes, "second example should be alternatingly semi-gamma-positive");
}

Witness check_semi_lemma(long n, const VerifyContext&) {
  PolySampler rng(0x51ed270b27u + static_cast<std::uint64_t>(n));
  for (int trial = 0; trial < 6; ++trial) {
    const int nu = static_cast<int>(rng.integer(0, 1));
    std::vector<Scalar> lambda;
    UniPoly f;
    for (long k = 0; k <= n; ++k) {
      lambda.push_back(Scalar(k == 0 ? rng.integer(1, 9) : rng.integer(0, 9)));
      f += mono(k, lambda.back()) * pow(UniPoly{1, 0, 1}, static_cast<unsigned long>(n - k));
    }
    f = f * one_plus_x(nu);
    GL_CHECK(same(semi_gamma_decompose(f).lambda, lambda, "recovered lambda"));
    const auto d = alt_semi_gamma_decompose(f);
    GL_CHECK(nonnegative(d.xi, "xi"));
    GL_CHECK(nonnegative(d.zeta, "zeta"));
    UniPoly combined;
    for (long k = 0; k <= n; ++k) {
      Scalar coef = d.xi.at(static_cast<std::size_t>(k));
      if (k >= 1) coef -= d.zeta.at(static_cast<std::size_t>(k - 1));
      combined += neg_x_pow(k) * one_plus_x(2 * n - 2 * k + nu) * coef;
    }
    GL_CHECK(same(combined, f, "sum (xi_k - zeta_{k-1}) (-x)^k (1+x)^{2n-2k+nu} vs f"));
  }
  return std::nullopt;
}

Witness check_product_lemma(long n, const VerifyContext&) {
  PolySampler rng(0x7f4a7c15u + static_cast<std::uint64_t>(n) * 31);
  for (int trial = 0; trial < 6; ++trial) {
    const long m = rng.integer(0, 6);
    const UniPoly f = rng.alt_gamma_positive(n, 9);
    const UniPoly g = rng.alt_gamma_positive(m, 9);
    const auto gf = alt_gamma_expand(f, n).coeffs;
    const auto gg = alt_gamma_expand(g, m).coeffs;
    std::vector<Scalar> conv(static_cast<std::size_t>((n + m) / 2 + 1), Scalar(0));
    for (std::size_t i = 0; i < gf.size(); ++i) {
      for (std::size_t j = 0; j < gg.size(); ++j) conv[i + j] += gf[i] * gg[j];
    }
    const auto prod = alt_gamma_expand(f * g, n + m).coeffs;
    GL_CHECK(same(prod, conv, "alternating gamma-vector of a product vs the convolution"));
    GL_CHECK(nonnegative(prod, "alternating gamma-vector of a product"));
  }
  return std::nullopt;
}

Witness check_thm31_i(long n, const VerifyContext& ctx) {
  for (const auto& f : corpus(n, Fam{ctx.families()}, true)) {
    for (long m = 1; m <= 3; ++m) {
      const auto coeffs = alt_gamma_expand(power_substitute(f, 2 * m), 2 * m * n).coeffs;
      if (auto w = nonnegative(coeffs, "alternating gamma-vector of f(x^{2m})")) {
        (*w)["f"] = poly_json(f);
        (*w)["m"] = m;
        return w;
      }
    }
  }
  return std::nullopt;
}

Witness check_thm31_ii(long n, const VerifyContext& ctx) {
  for (const auto& f : corpus(n, Fam{ctx.families()}, false)) {
    const auto eta = eta_from_gamma(gamma_expand(f, n));
    GL_CHECK(same(alt_gamma_expand(sq(f), 2 * n).coeffs, eta, "alternating gamma-vector of f(x^2) vs eta"));
    GL_CHECK(same(sq(f), expand(eta, [n](long k) { return mono(k) * one_minus_x(2 * n - 2 * k); }),
                  "f(x^2) vs sum eta_k x^k (1-x)^{2n-2k}"));
    GL_CHECK(same(squared_frame(f, n), expand(eta, [](long k) { return mono(k) * one_plus_x(k); }),
                  "sum f_i x^{2i}(1+x)^{2n-2i} vs sum eta_k x^k (1+x)^k"));
  }
  return std::nullopt;
}

Witness check_thm31_iii(long n, const VerifyContext& ctx) {
  for (const auto& f : corpus(n, Fam{ctx.families()}, false)) {
    const auto g = gamma_expand(f, n);
    const UniPoly eta_poly(eta_from_gamma(g));
    const auto xi = xi_from_gamma(g);
    GL_CHECK(same(eta_poly, expand(g.coeffs, [n](long i) { return mono(2 * i) * one_plus_2x(n - 2 * i); }),
                  "sum eta_k x^k vs sum gamma_i x^{2i} (1+2x)^{n-2i}"));
    GL_CHECK(same(eta_poly, expand(xi, [n](long k) { return mono(k) * one_plus_x(n - k); }),
                  "sum eta_k x^k vs sum xi_k x^k (1+x)^{n-k}"));
  }
  return std::nullopt;
}

Witness check_thm31_iv(long n, const VerifyContext& ctx) {
  for (const auto& f : corpus(n, Fam{ctx.families()}, false)) {
    const auto g = gamma_expand(f, n);
    const auto xi = xi_from_gamma(g);
    const UniPoly lhs = expand(g.coeffs, [](long i) { return mono(2 * i); });
    GL_CHECK(same(lhs, expand(xi, [n](long k) { return neg_x_pow(k) * one_plus_x(n - k); }),
                  "sum gamma_i x^{2i} vs sum xi_k (-x)^k (1+x)^{n-k}"));
    GL_CHECK(same(lhs, expand(xi, [n](long k) { return mono(k) * one_minus_x(n - k); }),
                  "sum gamma_i x^{2i} vs sum xi_k x^k (1-x)^{n-k}"));
  }
  return std::nullopt;
}

Witness check_odd_cex(long, const VerifyContext&) {
  const UniPoly f{1, 4, 1};
  GL_CHECK(require(classify(f, 2).gamma_positive == Flag::yes, "1+4x+x^2 should be gamma-positive"));
  const UniPoly f3 = power_substitute(f, 3);
  GL_CHECK(same(alt_gamma_expand(f3, 6).coeffs, {Scalar(1), Scalar(6), Scalar(9), Scalar(-2)},
                "alternating gamma-vector of f(x^3)"));
  return require(classify(f3, 6).alt_gamma_positive == Flag::no, "f(x^3) should not be alternatingly gamma-positive");
}

Witness check_cyclo_red(long n, const VerifyContext& ctx) {
  const Fam f{ctx.families()};
  for (long p : {2l, 3l, 5l}) {
    UniPoly geometric;
    for (long i = 0; i < p; ++i) geometric += mono(i);
    GL_CHECK(same(f.Phi(p), geometric, "Phi_p vs 1+x+...+x^{p-1}"));
    if (n % p == 0) continue;
    const UniPoly phi = f.Phi(n);
    if (auto w = same(f.Phi(p * n), exact_div(power_substitute(phi, p), phi), "Phi_{pn} vs Phi_n(x^p)/Phi_n(x)")) {
      (*w)["p"] = p;
      return w;
    }
  }
  return std::nullopt;
}

Witness check_cm_count(long n, const VerifyContext& ctx) {
  const UniPoly NA = Fam{ctx.families()}.NA(n);
  GL_CHECK(same(motzkin2_ub_poly(n), NA, "2-Motzkin paths by U+B steps vs N(A_n,x)"));
  return same(eval(NA, Scalar(1)), cat(n + 1), "N(A_n,1) vs C_{n+1}");
}

Witness check_cy_count(long n, const VerifyContext& ctx) {
  const UniPoly NB = Fam{ctx.families()}.NB(n);
  GL_CHECK(same(young2_weight_poly(n, YoungWeighting::sqrt_split), NB, "CY_n with x^{1/2} black cells vs N(B_n,x)"));
  GL_CHECK(same(young2_weight_poly(n, YoungWeighting::x_and_1px), squared_frame(NB, n),
                "CY_n with black x, white 1+x vs sum C(n,k)^2 x^{2k} (1+x)^{2n-2k}"));
  return same(Scalar(young2_count(n)), binom(2 * n, n), "|CY_n| vs C(2n,n)");
}

Witness check_nara_231(long n, const VerifyContext& ctx) {
  return same(pattern_class_descent_poly(n + 1, {{2, 3, 1}}), Fam{ctx.families()}.NA(n),
              "231-avoiders of S_{n+1} by descents vs N(A_n,x)");
}

Witness check_nara_b4(long n, const VerifyContext& ctx) {
  return same(pattern_class_descent_poly(n + 1, {{1, 3, 4, 2}, {3, 1, 4, 2}, {3, 4, 1, 2}, {3, 4, 2, 1}}),
              Fam{ctx.families()}.NB(n), "(1342,3142,3412,3421)-avoiders of S_{n+1} by descents vs N(B_n,x)");
}

Witness check_bm_recu(long m, const VerifyContext& ctx) {
  return same(Fam{ctx.families()}.M(m), boros_moll_by_recurrence(m), "d_i(m) closed form vs the (m, i) recurrence");
}

Witness check_bm_q(long m, const VerifyContext& ctx) {
  const Fam f{ctx.families()};
  const UniPoly Q = f.Q(m);
  GL_CHECK(same(Q, q_from_boros_moll(m), "Q_m vs 2^m m! x^m M_m(1/x)"));
  if (m == 0) return same(Q, c(1), "Q_0 vs 1");
  const UniPoly prev = f.Q(m - 1);
  const long k = m - 1;
  for (long i = 0; i <= m; ++i) {
    const Scalar rhs = Scalar(4 * k - 2 * i + 2) * prev[static_cast<std::size_t>(i)] +
                       (i >= 1 ? Scalar(6 * k - 2 * i + 5) * prev[static_cast<std::size_t>(i - 1)] : Scalar(0));
    GL_CHECK(same(Q[static_cast<std::size_t>(i)], rhs, "c_i(m) recurrence at i = " + std::to_string(i)));
  }
  return std::nullopt;
}

Witness check_symdec(long n, const VerifyContext& ctx) {
  const Fam f{ctx.families()};
  const UniPoly Q = f.Q(n);
  const auto d = symmetric_decomposition(Q, n);
  GL_CHECK(same(d.a + X() * d.b, Q, "a + x b vs Q_m"));
  GL_CHECK(require(is_symmetric(d.a, n) && is_symmetric(d.b, n - 1), "parts of Q_m are not symmetric"));
  const BiPoly A = ctx.families().bivariate(n);
  const auto bd = symmetric_decomposition(A, n - 1);
  GL_CHECK(same(bd.a, des_exc_symmetric_part(n, ctx), "symmetric part of A_n(s,t) vs the recursive a_n(s,t)"));
  if (n >= 2) {
    GL_CHECK(same(bd.b, des_exc_symmetric_part(n - 1, ctx) * UniPoly{-1, 1}, "b part of A_n(s,t) vs (s-1) a_{n-1}(s,t)"));
  }
  return std::nullopt;
}

Witness check_biv_marginals(long n, const VerifyContext& ctx) {
  const BiPoly A = ctx.families().bivariate(n);
  const UniPoly An = Fam{ctx.families()}.A(n);
  GL_CHECK(same(substitute_s(A, Scalar(1)), An, "A_n(1,t) vs A_n(t)"));
  return same(substitute_t(A, Scalar(1)), An, "A_n(s,1) vs A_n(s)");
}

// ---------------------------------------------------------------------------

std::vector<IdentityCheck> build_registry() {
  std::vector<IdentityCheck> r{
      {"ABREC", "closed forms of a_n, b_n, alpha_n, beta_n satisfy their first-order recurrences", "n", 1, 10, 30, check_abrec},
      {"ALPHA_ORACLE", "alpha_n = sum x^{pk+des} = sum x^{n-1-dasc} over S_n", "n", 1, 9, 9, check_alpha_oracle, true},
      {"ANXBNX", "(1+x)^{n+1} A_n(x) = B_n(x^2) + 2^n x A_n(x^2)", "n", 0, 10, 30, check_anxbnx},
      {"BDES_ORACLE", "B_n equals the descent enumerator of signed permutations", "n", 0, 6, kSignedBound, check_bdes_oracle, true},
      {"BETA_ORACLE", "beta_n = sum (2x)^{2lpk}(1+x)^{n-2lpk} over S_n", "n", 1, 9, 9, check_beta_oracle, true},
      {"BIV_MARGINALS", "A_n(1,t) = A_n(t) and A_n(s,1) = A_n(s)", "n", 1, 8, 9, check_biv_marginals, true},
      {"BM_Q", "Q_m = 2^m m! x^m M_m(1/x) and the c_i(m) recurrence", "m", 0, 30, 60, check_bm_q},
      {"BM_RECU", "Boros-Moll d_i(m) closed form agrees with its recurrence", "m", 0, 30, 60, check_bm_recu},
      {"CM_COUNT", "2-Motzkin paths by U and B steps give N(A_n,x); total C_{n+1}", "n", 0, 12, kMotzkinBound, check_cm_count, true},
      {"COKER1", "N(A_n,x) = sum C_k C(n,2k) x^k (1+x)^{n-2k}", "n", 0, 10, 30, check_coker1},
      {"COKER2", "sum N_k x^{2k}(1+x)^{2n-2k} = sum C_{k+1} C(n,k) x^k (1+x)^k", "n", 0, 10, 30, check_coker2},
      {"COR15", "alpha_n, beta_n closed forms and their composition forms", "n", 1, 10, 30, check_cor15},
      {"CUBE", "(1+x^2)^n has alternating gamma-vector C(n,k) 2^k", "n", 0, 10, 30, check_cube},
      {"CWZ", "sum C(n,k)^2 x^{2k}(1+x)^{2n-2k} = sum C(n,k) C(2k,k) x^k (1+x)^k", "n", 0, 10, 30, check_cwz},
      {"CYCLO_RED", "Phi_p = 1+...+x^{p-1} and Phi_{pn} = Phi_n(x^p)/Phi_n(x) for p = 2, 3, 5", "n", 1, 30, 60, check_cyclo_red},
      {"CY_COUNT", "2-colored Young diagrams give N(B_n,x); |CY_n| = C(2n,n)", "n", 0, 12, kYoungBound, check_cy_count, true},
      {"DES_ORACLE", "A_n = sum x^des over S_n", "n", 1, 9, 9, check_des_oracle, true},
      {"FAP_ORACLE", "F_n = sum x^fap over Stirling permutations", "n", 0, 7, kStirlingHardBound, check_fap_oracle, true},
      {"FN_CONV", "2x(1+x)^{n-1} A_n(x) = sum C(n,k) F_k F_{n-k}", "n", 1, 8, 30, check_fn_conv},
      {"FN_SEMI", "F_n is semi- and alternatingly semi-gamma-positive but not gamma-positive", "n", 1, 8, 30, check_fn_semi},
      {"FOATA", "gamma-vector of A_n counts permutations with pk = k and no double descents", "n", 1, 9, 9, check_foata, true},
      {"FTOH", "f-to-h transform on the cross-polytope and simplex boundaries", "n", 0, 10, 30, check_ftoh},
      {"HAT_RECU", "recurrences of Mhat(n,k) and Nhat(n,k)", "n", 1, 10, 30, check_hat_recu},
      {"HB_SPLIT", "f = f^E(x^2) + x f^O(x^2) on family members", "n", 0, 10, 30, check_hb_split},
      {"LEFTPEAK_B", "B_n = sum 4^k Phat(n,k) x^k (1+x)^{n-2k}", "n", 0, 10, 30, check_leftpeak_b},
      {"LN_CLOSED", "L_n and Lhat_n recurrences agree with their binomial closed forms", "n", 1, 12, 30, check_ln_closed},
      {"LN_RECU", "L_n and Lhat_n recurrences agree with the operator definition", "n", 1, 8, 12, check_ln_recu},
      {"LN_SUM", "2 L_n(1) = Lhat_n(1) = C(2n,n) and n L_n(1) = (4n-2) L_{n-1}(1)", "n", 1, 12, 30, check_ln_sum},
      {"LPK_ORACLE", "Phat_n = sum x^lpk over S_n", "n", 1, 9, 9, check_lpk_oracle, true},
      {"LUCAS", "Lucas polynomials at s=1+q, t=-q give q-integers", "n", 0, 12, 30, check_lucas},
      {"MFS_INVOLUTION", "every phi_x is an involution on S_n", "n", 1, 6, 8, check_mfs_involution, true},
      {"MFS_ORBIT", "orbit descent polynomials are x^pk (1+x)^{n-1-2pk} and sum to A_n", "n", 1, 8, 8, check_mfs_orbit, true},
      {"MFS_ORBIT_SQ", "orbit x^{2des} polynomials have the binomial alternating expansion", "n", 1, 8, 8, check_mfs_orbit_sq, true},
      {"MN_DERIV", "derivative identities between N(A_n,x) and N(B_n,x)", "n", 1, 10, 30, check_mn_deriv},
      {"MN_FACTOR", "(1+x)^2 divides the MN polynomial with quotient L_n", "n", 1, 8, 12, check_mn_factor},
      {"MN_GAMMA", "alternating gamma-vector of the MN polynomial: closed form, nonnegative, last entry zero", "n", 1, 8, 12, check_mn_gamma},
      {"MN_INTERLACE", "N(A_{n-1},x) interlaces N(B_n,x) + n x N(A_{n-1},x) and N(B_n,x)", "n", 1, 8, 12, check_mn_interlace},
      {"MN_STABLE", "the MN polynomial is Hurwitz stable by Hermite-Biehler and by Routh", "n", 1, 8, 12, check_mn_stable},
      {"NARA_231", "231-avoiders of S_{n+1} by descents give N(A_n,x)", "n", 0, 7, kPatternBound - 1, check_nara_231, true},
      {"NARA_B4", "(1342,3142,3412,3421)-avoiders of S_{n+1} by descents give N(B_n,x)", "n", 0, 7, kPatternBound - 1, check_nara_b4, true},
      {"NA_ALT", "N(A_n,x^2) = sum C_{k+1} C(n,k) (-x)^k (1+x)^{2n-2k}", "n", 0, 10, 30, check_na_alt},
      {"NA_SHIFT", "sum C_{k+1} C(n,k) x^k = sum C_k C(n,2k) x^{2k} (1+2x)^{n-2k}", "n", 0, 10, 30, check_na_shift},
      {"NB_ALT", "N(B_n,x^2) = sum C(n,k) C(2k,k) (-x)^k (1+x)^{2n-2k}", "n", 0, 10, 30, check_nb_alt},
      {"NB_SHIFT", "sum C(n,k) C(2k,k) x^k = sum C(n,2k) C(2k,k) x^{2k} (1+2x)^{n-2k}", "n", 0, 10, 30, check_nb_shift},
      {"ND_ALT", "alternating gamma-expansion of N(D_n,x^2) with nonnegative coefficients", "n", 2, 10, 30, check_nd_alt},
      {"ODD_CEX", "1+4x+x^2 is gamma-positive but f(x^3) is not alternatingly gamma-positive", "case", 0, 0, 0, check_odd_cex},
      {"OPID_A", "(xD)^n 1/(1-x) = x A_n(x)/(1-x)^{n+1}", "n", 1, 8, 12, check_opid_a},
      {"OPID_A2", "(xD)^n 1/(1-x^2) = 2^n x^2 A_n(x^2)/(1-x^2)^{n+1}", "n", 1, 8, 12, check_opid_a2},
      {"OPID_B2", "(xD)^n x/(1-x^2) = x B_n(x^2)/(1-x^2)^{n+1}", "n", 0, 8, 12, check_opid_b2},
      {"OPID_MN", "(x^2/(1-x^2) D)^n 1/(1-x) in terms of N(B_n,x^2) and N(A_{n-1},x^2)", "n", 1, 8, 12, check_opid_mn},
      {"OPID_NA", "(x^2/(1-x^2) D)^n 1/(1-x^2) = (n+1)! x^{n+2} N(A_{n-1},x^2)/(1-x^2)^{2n+1}", "n", 1, 8, 12, check_opid_na},
      {"OPID_NB", "(x^2/(1-x^2) D)^n x/(1-x^2) = n! x^{n+1} N(B_n,x^2)/(1-x^2)^{2n+1}", "n", 1, 8, 12, check_opid_nb},
      {"PEAK_ORACLE", "P_n = sum x^pk over S_n", "n", 1, 9, 9, check_peak_oracle, true},
      {"PNQN", "p^n + q^n in the basis (pq)^k (p+q)^{n-2k}", "n", 1, 12, 20, check_pnqn},
      {"PNQN02", "sum p^i q^{n-i} in the basis (pq)^k (p+q)^{n-2k}", "n", 0, 12, 20, check_pnqn02},
      {"PRODUCT_LEMMA", "products of alternatingly gamma-positive polynomials convolve their vectors", "n", 0, 10, 30, check_product_lemma},
      {"RIORDAN", "N(B_n,x) = sum C(n,2k) C(2k,k) x^k (1+x)^{n-2k}", "n", 0, 10, 30, check_riordan},
      {"SEMI_EXAMPLES", "the two worked semi-gamma examples", "case", 0, 0, 0, check_semi_examples},
      {"SEMI_LEMMA", "semi-gamma-positive inputs have nonnegative xi, zeta and recombine", "n", 0, 10, 30, check_semi_lemma},
      {"SPECIALS", "special values and initial conditions of a_n, b_n, alpha_n, beta_n, A_n, B_n", "n", 1, 10, 30, check_specials},
      {"STEMBRIDGE", "A_n = 2^{1-n} sum 4^k P(n,k) x^k (1+x)^{n-1-2k}", "n", 1, 10, 30, check_stembridge},
      {"SYMDEC", "symmetric decompositions of Q_m and A_n(s,t)", "n", 1, 8, 9, check_symdec, true},
      {"THM31_I", "f gamma-positive implies f(x^{2m}) alternatingly gamma-positive, m = 1, 2, 3", "n", 0, 10, 30, check_thm31_i},
      {"THM31_II", "f(x^2) has alternating gamma-vector eta, with both equivalent forms", "n", 0, 10, 30, check_thm31_ii},
      {"THM31_III", "sum eta_k x^k in the (1+2x) and (xi, 1+x) forms", "n", 0, 10, 30, check_thm31_iii},
      {"THM31_IV", "sum gamma_i x^{2i} = sum xi_k (-x)^k (1+x)^{n-k} = sum xi_k x^k (1-x)^{n-k}", "n", 0, 10, 30, check_thm31_iv},
      {"THM51_I", "A_n(x^2), B_n(x^2) alternatingly gamma-positive with vectors a_n, b_n", "n", 1, 10, 30, check_thm51_i},
      {"THM51_II", "squared-frame identities for A_n and B_n", "n", 1, 10, 30, check_thm51_ii},
      {"THM51_III", "a_n, b_n closed forms through peak and left-peak polynomials", "n", 1, 10, 30, check_thm51_iii},
      {"THM51_IV", "a_n, b_n in terms of alpha_n, beta_n and the alternating peak expansions", "n", 1, 10, 30, check_thm51_iv},
      {"THM_FNX", "gamma-positive family members are alternatingly semi-gamma-positive", "n", 0, 10, 30, check_thm_fnx},
  };
  std::sort(r.begin(), r.end(), [](const IdentityCheck& a, const IdentityCheck& b) { return a.id < b.id; });
  return r;
}

std::string range_text(const IdentityCheck& chk, long bound) {
  if (bound < chk.min_param) return chk.param + ": empty";
  return chk.param + "=" + std::to_string(chk.min_param) + ".." + std::to_string(bound);
}

VerificationReport execute(const IdentityCheck& chk, long bound, const VerifyContext& ctx) {
  if (chk.enumerative && ctx.enumeration_cap) bound = std::min(bound, *ctx.enumeration_cap);
  VerificationReport rep{chk.id, range_text(chk, bound), "pass", Json()};
  for (long v = chk.min_param; v <= bound; ++v) {
    Witness w;
    try {
      w = chk.fn(v, ctx);
    } catch (const std::exception& e) {
      w = Json{{"detail", std::string("exception: ") + e.what()}};
    }
    if (w) {
      (*w)["params"] = Json{{chk.param, v}};
      rep.status = "fail";
      rep.witness = std::move(*w);
      break;
    }
  }
  return rep;
}

}  // namespace

Json VerificationReport::to_json() const {
  return Json{{"id", id}, {"range", range}, {"status", status}, {"witness", witness}};
}

const std::vector<IdentityCheck>& registry() {
  static const std::vector<IdentityCheck> r = build_registry();
  return r;
}

const IdentityCheck* find_identity(std::string_view id) {
  for (const auto& chk : registry()) {
    if (chk.id == id) return &chk;
  }
  return nullptr;
}

VerificationReport run_identity(std::string_view id, long bound, const VerifyContext& ctx) {
  const IdentityCheck* chk = find_identity(id);
  if (chk == nullptr) throw UnknownIdentity("unknown identity '" + std::string(id) + "'");
  if (bound > chk->max_bound) {
    throw BoundExceeded(chk->id + ": bound " + std::to_string(bound) + " exceeds the maximum " +
                        std::to_string(chk->max_bound));
  }
  return execute(*chk, bound, ctx);
}

VerificationReport run_identity(std::string_view id, const VerifyContext& ctx) {
  const IdentityCheck* chk = find_identity(id);
  if (chk == nullptr) throw UnknownIdentity("unknown identity '" + std::string(id) + "'");
  return execute(*chk, chk->default_bound, ctx);
}

std::vector<VerificationReport> run_all(const RunAllOptions& opts, const VerifyContext& ctx) {
  const auto& checks = registry();
  std::vector<VerificationReport> out(checks.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++) {
      const auto& chk = checks[i];
      const long bound = opts.bound ? std::min(*opts.bound, chk.max_bound) : chk.default_bound;
      out[i] = execute(chk, bound, ctx);
    }
  };
  const unsigned threads = std::max(1u, opts.threads);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Conjecture checkers

VerificationReport conjecture_boros_moll(long max_m) {
  if (max_m > kBorosMollMax) {
    throw BoundExceeded("conjecture boros-moll: max_m " + std::to_string(max_m) + " exceeds " + std::to_string(kBorosMollMax));
  }
  VerificationReport rep{"CONJ_BOROS_MOLL", "m=1.." + std::to_string(max_m), "holds-to-bound", Json()};
  for (long m = 1; m <= max_m; ++m) {
    const auto d = symmetric_decomposition(q_poly(m), m);
    const std::pair<const UniPoly*, long> parts[] = {{&d.a, m}, {&d.b, m - 1}};
    for (const auto& [part, center] : parts) {
      const char* name = part == &d.a ? "a" : "b";
      std::string problem;
      if (!is_symmetric(*part, center)) {
        problem = "not symmetric";
      } else if (!is_unimodal(*part, center)) {
        problem = "not unimodal";
      } else if (!all_nonnegative(alt_gamma_expand(*part, center).coeffs)) {
        problem = "not alternatingly gamma-positive";
      }
      if (!problem.empty()) {
        rep.status = "fail";
        rep.witness = Json{{"params", {{"m", m}}}, {"part", name}, {"detail", problem}, {"polynomial", poly_json(*part)}};
        return rep;
      }
    }
  }
  return rep;
}

BiPoly des_exc_symmetric_part(long n, const VerifyContext& ctx) {
  if (n < 1) throw std::invalid_argument("des_exc_symmetric_part: n must be >= 1");
  BiPoly a = BiPoly::one();
  for (long k = 2; k <= n; ++k) a = ctx.families().bivariate(k) - shift(a, 1) * UniPoly{-1, 1};
  return a;
}

VerificationReport conjecture_des_exc(long max_n, const std::vector<Scalar>& s_samples, const VerifyContext& ctx) {
  if (max_n > kDesExcMax) {
    throw BoundExceeded("conjecture des-exc: max_n " + std::to_string(max_n) + " exceeds " + std::to_string(kDesExcMax));
  }
  for (const auto& s : s_samples) {
    if (s < 1) throw std::invalid_argument("conjecture des-exc: sampled s must be >= 1, got " + to_string(s));
  }
  VerificationReport rep{"CONJ_DES_EXC", "n=1.." + std::to_string(max_n), "holds-to-bound", Json()};
  auto fail = [&](long n, Json detail) {
    rep.status = "fail";
    detail["params"] = Json{{"n", n}};
    rep.witness = std::move(detail);
    return rep;
  };
  BiPoly a = BiPoly::one();
  for (long n = 1; n <= max_n; ++n) {
    const BiPoly A = ctx.families().bivariate(n);
    if (n >= 2) a = A - shift(a, 1) * UniPoly{-1, 1};
    if (!is_symmetric(a, n - 1)) return fail(n, Json{{"detail", "a_n(s,t) is not symmetric in t"}, {"a_n", bipoly_json(a)}});
    const auto gamma = gamma_vector(a, n - 1, BasisSign::plus);
    for (std::size_t k = 0; k < gamma.size(); ++k) {
      const UniPoly in_u = taylor_shift(gamma[k], Scalar(1));  // gamma_k as a polynomial in u = s - 1
      if (!all_nonnegative(in_u.coeffs())) {
        return fail(n, Json{{"detail", "gamma_k has a negative coefficient in powers of (s-1)"},
                            {"k", k},
                            {"gamma_k_in_s_minus_1", poly_json(in_u)}});
      }
    }
    for (const auto& s : s_samples) {
      const auto g = gamma_expand(substitute_s(a, s), n - 1).coeffs;
      if (!all_nonnegative(g)) {
        return fail(n, Json{{"detail", "gamma-vector of a_n(s,.) has a negative entry"}, {"s", to_string(s)}, {"gamma", to_string_list(g)}});
      }
      if (!is_unimodal(substitute_s(A, s), n - 1)) {
        return fail(n, Json{{"detail", "A_n(s,.) is not unimodal"}, {"s", to_string(s)}});
      }
    }
  }
  return rep;
}

}  // namespace gammalab
