#pragma once

#include <gammalab/families.hpp>
#include <gammalab/oracles.hpp>

#include <json.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace gammalab {

using Json = nlohmann::json;

struct VerifyContext {
  const FamilyProvider* provider = &default_family_provider();
  EnumOptions enumeration{};
  /// Optional ceiling on the bound of enumerative checks (GAMMALAB_MAX_N in the CLI).
  std::optional<long> enumeration_cap;

  const FamilyProvider& families() const { return *provider; }
};

/// Outcome of one registered check or conjecture run.
struct VerificationReport {
  std::string id;
  std::string range;
  std::string status;  // "pass", "fail" or "holds-to-bound"
  Json witness;        // null unless status is "fail"

  bool failed() const { return status == "fail"; }
  Json to_json() const;
};

/// A check at one parameter value returns nothing on success and a witness
/// object (difference polynomial, detail text) on failure.
using CheckFn = std::function<std::optional<Json>(long, const VerifyContext&)>;

struct IdentityCheck {
  std::string id;
  std::string description;
  std::string param;  // "n", "m" or "case"
  long min_param = 0;
  long default_bound = 0;
  long max_bound = 0;
  CheckFn fn;
  bool enumerative = false;  // bound subject to VerifyContext::enumeration_cap
};

/// All registered checks, sorted by id.
const std::vector<IdentityCheck>& registry();
const IdentityCheck* find_identity(std::string_view id);

/// Runs every parameter from the check's minimum up to bound.
/// UnknownIdentity for an unregistered id, BoundExceeded above the check's maximum.
VerificationReport run_identity(std::string_view id, long bound, const VerifyContext& ctx = {});
/// Default bounds.
VerificationReport run_identity(std::string_view id, const VerifyContext& ctx = {});

struct RunAllOptions {
  std::optional<long> bound;  // clamped per check to its own maximum; unset means defaults
  unsigned threads = 1;
};

/// Every registered check, ordered by id. Output does not depend on the thread count.
std::vector<VerificationReport> run_all(const RunAllOptions& opts = {}, const VerifyContext& ctx = {});

inline constexpr long kBorosMollMax = 60;
inline constexpr long kDesExcMax = 9;

/// Symmetric decomposition of Q_m for 1 <= m <= max_m: both parts symmetric,
/// unimodal and alternatingly gamma-positive. Report-only.
VerificationReport conjecture_boros_moll(long max_m);

/// a_1 = 1, a_n = A_n(s,t) - (s-1) t a_{n-1}(s,t) for 2 <= n <= max_n: symmetry in t,
/// the (s-1)-expansion certificate, and numeric checks at each sampled s.
VerificationReport conjecture_des_exc(long max_n, const std::vector<Scalar>& s_samples,
                                      const VerifyContext& ctx = {});

/// The recursive parts a_n(s,t) used by the checker.
BiPoly des_exc_symmetric_part(long n, const VerifyContext& ctx = {});

}  // namespace gammalab
