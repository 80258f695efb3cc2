#pragma once

#include <gammalab/polynomial.hpp>

#include <cstdint>
#include <random>

namespace gammalab {

/// Seeded source of random exact polynomials for property checks.
class PolySampler {
 public:
  explicit PolySampler(std::uint64_t seed) : rng_(seed) {}

  /// Integer in [lo, hi].
  long integer(long lo, long hi);
  /// p/q with p in [-range, range] and q in [1, max_den].
  Scalar rational(long range, long max_den);

  /// Random polynomial of exact degree n (nonzero leading coefficient).
  UniPoly any(long n, long range, long max_den = 1);
  /// Symmetric about n with nonzero constant term, rational coefficients allowed.
  UniPoly symmetric(long n, long range, long max_den = 1);
  /// sum gamma_k x^k (1+x)^{n-2k} with gamma_0 >= 1 and the rest in [0, range].
  UniPoly gamma_positive(long n, long range);
  /// sum gamma_k (-x)^k (1+x)^{n-2k} with the same coefficient law.
  UniPoly alt_gamma_positive(long n, long range);
  /// Random standard polynomial (positive leading coefficient) of degree in [0, max_degree].
  UniPoly standard(long max_degree, long range);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gammalab
