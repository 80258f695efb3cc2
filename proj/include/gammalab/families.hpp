#pragma once

#include <gammalab/polynomial.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gammalab {

enum class FamilyId {
  EULERIAN_A,
  EULERIAN_B,
  NARAYANA_A,
  NARAYANA_B,
  NARAYANA_D,
  PEAK,
  LEFT_PEAK,
  L_POLY,
  LHAT_POLY,
  A_SMALL,
  B_SMALL,
  ALPHA,
  BETA,
  FLAG_AP,
  BOROS_MOLL,
  Q_POLY,
  CYCLOTOMIC,
  BIV_DES_EXC,
};

const std::vector<FamilyId>& all_families();
/// Lowercase enumerator name, e.g. "eulerian_a".
std::string family_name(FamilyId id);
std::optional<FamilyId> family_from_name(std::string_view name);

// Generators. All are memoized per (family, n) and throw std::invalid_argument
// below their domain.
UniPoly eulerian_a(long n);
UniPoly eulerian_b(long n);

enum class NarayanaType { A, B, D };
UniPoly narayana(NarayanaType type, long n);

UniPoly peak_poly(long n);       // n >= 1
UniPoly left_peak_poly(long n);  // n >= 0, with P^_0 = 1
UniPoly l_poly(long n);          // n >= 1
UniPoly lhat_poly(long n);       // n >= 0

enum class AbKind { a, b, alpha, beta };
UniPoly ab_poly(AbKind kind, long n);  // a, alpha: n >= 1; b, beta: n >= 0

UniPoly flag_ap_poly(long n);
UniPoly boros_moll(long m);  // d_i(m) closed form
UniPoly q_poly(long m);      // Q_m recurrence
UniPoly cyclotomic(long n);  // n >= 1

inline constexpr long kDefaultBivBound = 9;
/// Sum over S_n of s^des t^exc, by enumeration.
BiPoly biv_des_exc(long n, long bound = kDefaultBivBound);

/// Univariate family by id. BIV_DES_EXC is rejected here.
UniPoly family(FamilyId id, long n);

// Independent constructions used for cross-checks.
UniPoly l_closed(long n);
UniPoly lhat_closed(long n);
UniPoly boros_moll_by_recurrence(long m);
/// 2^m m! x^m M_m(1/x).
UniPoly q_from_boros_moll(long m);
/// 2^{1-n} sum 4^k P(n,k) x^{2k} (1+2x)^{n-1-2k}.
UniPoly a_closed(long n);
/// sum 4^k P^(n,k) x^{2k} (1+2x)^{n-2k}.
UniPoly b_closed(long n);
/// 2^{1-n} sum 4^k P(n,k) x^{2k} (1+x)^{n-1-2k}.
UniPoly alpha_closed(long n);
/// sum 4^k P^(n,k) x^{2k} (1+x)^{n-2k}.
UniPoly beta_closed(long n);
/// N(B_n, x^2) + (n+1) x N(A_{n-1}, x^2), n >= 1.
UniPoly mn_combination(long n);

/// Source of family values for the verify suite; overridable for fault injection.
class FamilyProvider {
 public:
  virtual ~FamilyProvider() = default;
  virtual UniPoly get(FamilyId id, long n) const { return family(id, n); }
  virtual BiPoly bivariate(long n) const { return biv_des_exc(n); }
};

const FamilyProvider& default_family_provider();

}  // namespace gammalab
