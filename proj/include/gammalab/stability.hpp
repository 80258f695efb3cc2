#pragma once

#include <gammalab/polynomial.hpp>

#include <string>
#include <vector>

namespace gammalab {

/// A rational or one of the two infinities.
struct ExtScalar {
  enum class Kind { neg_inf, finite, pos_inf };
  Kind kind = Kind::finite;
  Scalar value;

  static ExtScalar neg_infinity() { return {Kind::neg_inf, Scalar(0)}; }
  static ExtScalar pos_infinity() { return {Kind::pos_inf, Scalar(0)}; }
  static ExtScalar of(const Scalar& v) { return {Kind::finite, v}; }
};

/// Distinct real roots of f in (lo, hi], by Sturm sequences on the square-free part.
long sturm_real_root_count(const UniPoly& f, const ExtScalar& lo, const ExtScalar& hi);

struct RootInterval {
  Scalar lo;  // exclusive
  Scalar hi;  // inclusive
  long multiplicity = 1;
};

struct RootIsolation {
  std::vector<RootInterval> intervals;  // sorted, disjoint, one distinct root each
  long total_multiplicity() const;
};

RootIsolation isolate_real_roots(const UniPoly& f);
/// Every root real (counted with multiplicity). Nonzero constants count as real-rooted.
bool is_real_rooted(const UniPoly& f);

enum class Interlacing { interlaces, alternates_left, neither };
std::string to_string(Interlacing r);

/// Relation of p to q in the weak sense: p interlaces q (deg q = deg p + 1) or
/// p alternates left of q (equal degrees).
Interlacing interlacing_relation(const UniPoly& p, const UniPoly& q);

enum class HurwitzStatus { stable, weakly_stable_only, unstable };
std::string to_string(HurwitzStatus s);

struct HurwitzVerdict {
  HurwitzStatus status = HurwitzStatus::unstable;
  std::string certificate;
};

/// Hermite-Biehler test. A negative leading coefficient is normalized away
/// (roots are unchanged); the zero polynomial is rejected.
HurwitzVerdict hurwitz_classify(const UniPoly& f);

enum class RouthResult { stable, not_stable, indeterminate };
std::string to_string(RouthResult r);

/// Exact Routh array, with the same sign normalization as hurwitz_classify.
RouthResult routh_stable(const UniPoly& f);

}  // namespace gammalab
