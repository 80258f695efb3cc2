#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gammalab {

/// Exact rational; gmpxx keeps it canonical (lowest terms, positive denominator).
using Scalar = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

/// Parses "a" or "a/b" (decimal digits, optional leading minus).
Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& s);

/// Binomial coefficient; zero outside 0 <= k <= n.
Integer binomial(long n, long k);
Integer factorial(long n);
Integer catalan(long n);
/// (2n-1)!! with (-1)!! = 1.
Integer double_factorial_odd(long n);

Scalar power(const Scalar& base, long exponent);

}  // namespace gammalab
