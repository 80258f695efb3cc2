#include <gammalab/ratfun.hpp>

namespace gammalab {

RatFun::RatFun(UniPoly num, UniPoly den) {
  if (den.is_zero()) throw std::invalid_argument("RatFun: zero denominator");
  if (num.is_zero()) {
    den_ = UniPoly::one();
    return;
  }
  const UniPoly g = gcd(num, den);
  if (g.degree_or(0) > 0) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  Scalar scale = content(den);
  if (sgn(den.leading()) < 0) scale = -scale;
  const Scalar inv = 1 / scale;
  num_ = num * inv;
  den_ = den * inv;
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

RatFun operator*(const RatFun& a, const RatFun& b) { return RatFun(a.num_ * b.num_, a.den_ * b.den_); }

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.num_.is_zero()) throw std::invalid_argument("RatFun: division by zero");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

bool operator==(const RatFun& a, const RatFun& b) { return a.num_ * b.den_ == b.num_ * a.den_; }

RatFun derivative(const RatFun& r) {
  const UniPoly& n = r.num();
  const UniPoly& d = r.den();
  return RatFun(derivative(n) * d - n * derivative(d), d * d);
}

RatFun pow(const RatFun& r, unsigned long exponent) {
  return RatFun(pow(r.num(), exponent), pow(r.den(), exponent));
}

RatFun compose(const UniPoly& p, const RatFun& r) {
  RatFun acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc = acc * r + RatFun(UniPoly::constant(*it));
  }
  return acc;
}

RatFun apply_diff_operator(const RatFun& g, const RatFun& r, long n) {
  if (n < 0) throw std::invalid_argument("apply_diff_operator: n must be >= 0");
  RatFun out = r;
  for (long i = 0; i < n; ++i) out = g * derivative(out);
  return out;
}

std::string to_text(const RatFun& r) { return "(" + to_text(r.num()) + ") / (" + to_text(r.den()) + ")"; }

}  // namespace gammalab
