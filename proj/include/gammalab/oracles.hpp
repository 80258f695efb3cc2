#pragma once

#include <gammalab/polynomial.hpp>

#include <functional>
#include <vector>

namespace gammalab {

/// One-line permutation word over 1..n.
using PermWord = std::vector<int>;
/// Word over the multiset {1,1,...,n,n}.
using StirlingWord = std::vector<int>;

/// Statistics under pi(0) = pi(n+1) = infinity; lpk instead uses pi(0) = 0.
struct StatRecord {
  long des = 0;
  long asc = 0;  // includes position n, so it is one more than the usual count
  long pk = 0;
  long val = 0;
  long ddes = 0;
  long dasc = 0;
  long lpk = 0;
  long maj = 0;
  long exc = 0;
};

struct EnumOptions {
  long bound = 9;        // largest n for S_n enumeration
  unsigned threads = 1;  // partitioned by first letter; results are identical for any count
};

inline constexpr long kStirlingDefaultBound = 7;
inline constexpr long kStirlingHardBound = 8;

/// Throws std::invalid_argument unless pi is a permutation of 1..n.
void validate_perm(const PermWord& pi);
StatRecord perm_stats(const PermWord& pi);

enum class Weight {
  des,             // x^des
  pk,              // x^pk
  lpk,             // x^lpk
  pk_plus_des,     // x^{pk+des}
  complement_dasc, // x^{n-1-dasc}
  beta,            // (2x)^{2 lpk} (1+x)^{n - 2 lpk}
  two_des,         // x^{2 des}
};

/// Calls visit on every permutation of [n] in lexicographic order.
void for_each_permutation(long n, const std::function<void(const PermWord&)>& visit);

UniPoly stat_polynomial(long n, Weight w, const EnumOptions& opts = {});
/// gamma_k = #{pi in S_n : pk = k, ddes = 0}, k = 0..floor((n-1)/2).
std::vector<Scalar> gamma_count(long n, const EnumOptions& opts = {});
/// Sum over S_n of s^des t^exc; coefficient j is the s-polynomial of t^j.
BiPoly des_exc_polynomial(long n, const EnumOptions& opts = {});

/// The modified Foata-Strehl involution for the letter x.
PermWord mfs_phi(const PermWord& pi, int x);
/// Closure of {pi} under every phi_x, sorted lexicographically.
std::vector<PermWord> mfs_orbit(const PermWord& pi, long bound = 9);
/// Partition of S_n into orbits, each sorted, ordered by first member.
std::vector<std::vector<PermWord>> mfs_orbits(long n, long bound = 9);

struct StirlingStats {
  long ap = 0;
  long lap = 0;
  long fap = 0;
};

void for_each_stirling(long n, const std::function<void(const StirlingWord&)>& visit);
std::vector<StirlingWord> stirling_permutations(long n, long bound = kStirlingHardBound);
bool is_stirling(const StirlingWord& w);
StirlingStats stirling_stats(const StirlingWord& w);
/// Sum over Q_n of x^fap.
UniPoly fap_polynomial(long n, long bound = kStirlingDefaultBound);

inline constexpr long kMotzkinBound = 14;
/// Sum over 2-Motzkin paths of length n of x^{#U + #B}.
UniPoly motzkin2_ub_poly(long n);

inline constexpr long kYoungBound = 12;
enum class YoungWeighting {
  sqrt_split,  // each black cell weighs x^{1/2}
  x_and_1px,   // black cell x, white cell 1+x
};
UniPoly young2_weight_poly(long n, YoungWeighting weighting);
/// |CY_n|, counted directly.
Integer young2_count(long n);

inline constexpr long kPatternBound = 9;
/// Classical containment: some subsequence of pi is order-isomorphic to pattern.
bool contains_pattern(const PermWord& pi, const PermWord& pattern);
/// Sum of x^des over permutations of [n] avoiding every pattern.
UniPoly pattern_class_descent_poly(long n, const std::vector<PermWord>& patterns);

inline constexpr long kSignedBound = 7;
/// Sum over signed permutations of [n] of x^des, with a descent at i in {0..n-1}
/// when pi(i) > pi(i+1) and pi(0) = 0.
UniPoly signed_descent_polynomial(long n, long bound = kSignedBound);

/// Parses "3,1,2" (commas or spaces) into a word; no validation.
PermWord parse_perm(std::string_view text);
std::string perm_to_string(const PermWord& pi);

}  // namespace gammalab
