#pragma once

#include <gammalab/polynomial.hpp>

namespace gammalab {

/// Reduced quotient num/den of polynomials over Q.
///
/// Normal form: gcd(num, den) = 1 and den is a primitive integer polynomial
/// with positive leading coefficient, so structural equality is exact equality.
class RatFun {
 public:
  RatFun() : den_(UniPoly::one()) {}
  RatFun(UniPoly num) : num_(std::move(num)), den_(UniPoly::one()) {}  // NOLINT(implicit)
  RatFun(UniPoly num, UniPoly den);

  const UniPoly& num() const noexcept { return num_; }
  const UniPoly& den() const noexcept { return den_; }

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  /// Cross-multiplied comparison.
  friend bool operator==(const RatFun& a, const RatFun& b);
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

 private:
  UniPoly num_;
  UniPoly den_;
};

RatFun derivative(const RatFun& r);
RatFun pow(const RatFun& r, unsigned long exponent);

/// p(r) by Horner's rule in the field of rational functions.
RatFun compose(const UniPoly& p, const RatFun& r);

/// (g D)^n r, where D is d/dx.
RatFun apply_diff_operator(const RatFun& g, const RatFun& r, long n);

std::string to_text(const RatFun& r);

}  // namespace gammalab
