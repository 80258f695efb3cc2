#pragma once

#include <gammalab/errors.hpp>
#include <gammalab/scalar.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gammalab {

template <class Ring>
class Polynomial;

template <class Ring>
struct ring_traits;

template <>
struct ring_traits<Scalar> {
  static Scalar zero() { return Scalar(0); }
  static Scalar one() { return Scalar(1); }
  static bool is_zero(const Scalar& s) { return sgn(s) == 0; }
};

template <class Ring>
struct ring_traits<Polynomial<Ring>> {
  static Polynomial<Ring> zero() { return Polynomial<Ring>(); }
  static Polynomial<Ring> one() { return Polynomial<Ring>::constant(ring_traits<Ring>::one()); }
  static bool is_zero(const Polynomial<Ring>& p) { return p.is_zero(); }
};

/// Dense univariate polynomial over a commutative ring, stored low-to-high.
///
/// The representation is canonical: trailing zero coefficients are stripped,
/// so the zero polynomial is the empty coefficient list and has no degree.
/// `Polynomial<Scalar>` is the univariate workhorse; `Polynomial<Polynomial<Scalar>>`
/// is a polynomial in t whose coefficients are polynomials in s.
template <class Ring>
class Polynomial {
 public:
  using coefficient_type = Ring;
  using traits = ring_traits<Ring>;

  Polynomial() = default;
  explicit Polynomial(std::vector<Ring> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Ring> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(Ring c) { return Polynomial(std::vector<Ring>{std::move(c)}); }

  static Polynomial monomial(Ring c, std::size_t k) {
    std::vector<Ring> v(k + 1, traits::zero());
    v[k] = std::move(c);
    return Polynomial(std::move(v));
  }

  static Polynomial x() { return monomial(traits::one(), 1); }
  static Polynomial one() { return constant(traits::one()); }

  const std::vector<Ring>& coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  std::optional<std::size_t> degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  /// Degree, or `fallback` for the zero polynomial.
  long degree_or(long fallback) const noexcept {
    return coeffs_.empty() ? fallback : static_cast<long>(coeffs_.size()) - 1;
  }

  /// Coefficient of x^i (zero beyond the stored range).
  Ring operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : traits::zero(); }

  const Ring& leading() const { return coeffs_.back(); }

  Polynomial operator-() const {
    std::vector<Ring> v;
    v.reserve(coeffs_.size());
    for (const auto& c : coeffs_) v.push_back(-c);
    return Polynomial(std::move(v));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), traits::zero());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), traits::zero());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Ring> v(a.size() + b.size() - 1, traits::zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (traits::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.size(); ++j) {
        Ring term = a.coeffs_[i] * b.coeffs_[j];
        v[i + j] += term;
      }
    }
    return Polynomial(std::move(v));
  }

  /// Multiplication by a coefficient-ring element.
  friend Polynomial operator*(const Polynomial& a, const Ring& c) {
    std::vector<Ring> v;
    v.reserve(a.size());
    for (const auto& coeff : a.coeffs_) {
      Ring term = coeff * c;
      v.push_back(std::move(term));
    }
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const Ring& c, const Polynomial& a) { return a * c; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void trim() {
    while (!coeffs_.empty() && traits::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<Ring> coeffs_;
};

using UniPoly = Polynomial<Scalar>;
/// Polynomial in t with coefficients in Q[s].
using BiPoly = Polynomial<UniPoly>;

// ---------------------------------------------------------------------------
// Ring-generic helpers

template <class Ring>
Polynomial<Ring> derivative(const Polynomial<Ring>& f) {
  if (f.size() <= 1) return {};
  std::vector<Ring> v;
  v.reserve(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) {
    Ring term = f.coeffs()[i] * Scalar(static_cast<long>(i));
    v.push_back(std::move(term));
  }
  return Polynomial<Ring>(std::move(v));
}

/// Horner evaluation.
template <class Ring>
Ring eval(const Polynomial<Ring>& f, const Ring& v) {
  Ring acc = ring_traits<Ring>::zero();
  for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it) {
    Ring next = acc * v;
    next += *it;
    acc = std::move(next);
  }
  return acc;
}

template <class Ring>
Polynomial<Ring> pow(const Polynomial<Ring>& base, unsigned long exponent) {
  Polynomial<Ring> result = Polynomial<Ring>::one();
  Polynomial<Ring> b = base;
  while (exponent > 0) {
    if (exponent & 1UL) result = result * b;
    exponent >>= 1;
    if (exponent > 0) b = b * b;
  }
  return result;
}

/// x^k * f
template <class Ring>
Polynomial<Ring> shift(const Polynomial<Ring>& f, std::size_t k) {
  if (f.is_zero() || k == 0) return f;
  std::vector<Ring> v(k, ring_traits<Ring>::zero());
  v.insert(v.end(), f.coeffs().begin(), f.coeffs().end());
  return Polynomial<Ring>(std::move(v));
}

/// (a + b x)^k with binomial coefficients written out directly.
template <class Ring = Scalar>
Polynomial<Ring> linear_power(const Scalar& a, const Scalar& b, long k) {
  std::vector<Ring> v;
  v.reserve(static_cast<std::size_t>(k) + 1);
  for (long i = 0; i <= k; ++i) {
    Scalar c = Scalar(binomial(k, i)) * power(a, k - i) * power(b, i);
    v.push_back(Ring(ring_traits<Ring>::one() * c));
  }
  return Polynomial<Ring>(std::move(v));
}

/// x^n f(1/x); requires n >= deg f.
template <class Ring>
Polynomial<Ring> reverse(const Polynomial<Ring>& f, long n) {
  if (f.degree_or(-1) > n) {
    throw DegreeTooSmall("reverse: frame " + std::to_string(n) + " is below degree " +
                         std::to_string(f.degree_or(-1)));
  }
  if (f.is_zero()) return f;
  std::vector<Ring> v(static_cast<std::size_t>(n) + 1, ring_traits<Ring>::zero());
  for (std::size_t i = 0; i < f.size(); ++i) v[static_cast<std::size_t>(n) - i] = f.coeffs()[i];
  return Polynomial<Ring>(std::move(v));
}

/// f(x^m)
template <class Ring>
Polynomial<Ring> power_substitute(const Polynomial<Ring>& f, long m) {
  if (m < 1) throw std::invalid_argument("power_substitute: m must be >= 1");
  if (f.is_zero() || m == 1) return f;
  std::vector<Ring> v((f.size() - 1) * static_cast<std::size_t>(m) + 1, ring_traits<Ring>::zero());
  for (std::size_t i = 0; i < f.size(); ++i) v[i * static_cast<std::size_t>(m)] = f.coeffs()[i];
  return Polynomial<Ring>(std::move(v));
}

/// f(x + c), by repeated synthetic division.
template <class Ring>
Polynomial<Ring> taylor_shift(const Polynomial<Ring>& f, const Scalar& c) {
  std::vector<Ring> v = f.coeffs();
  const std::size_t n = v.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) {
      Ring term = v[j] * c;
      v[j - 1] += term;
    }
  }
  return Polynomial<Ring>(std::move(v));
}

/// Exact quotient f / (1 - x); throws NotDivisible when f(1) != 0.
template <class Ring>
Polynomial<Ring> divide_by_one_minus_x(const Polynomial<Ring>& f) {
  // f = (1-x) q  <=>  q_j = f_0 + ... + f_j, and the full sum vanishes.
  std::vector<Ring> q;
  Ring running = ring_traits<Ring>::zero();
  for (std::size_t j = 0; j < f.size(); ++j) {
    running += f.coeffs()[j];
    if (j + 1 < f.size()) q.push_back(running);
  }
  if (!ring_traits<Ring>::is_zero(running)) throw NotDivisible("polynomial is not divisible by 1 - x");
  return Polynomial<Ring>(std::move(q));
}

/// f_i == f_{n-i} for every 0 <= i <= n; requires n >= deg f.
template <class Ring>
bool is_symmetric(const Polynomial<Ring>& f, long n) {
  if (f.degree_or(-1) > n) {
    throw DegreeTooSmall("is_symmetric: center " + std::to_string(n) + " is below degree " +
                         std::to_string(f.degree_or(-1)));
  }
  for (long i = 0; 2 * i < n; ++i) {
    if (f[static_cast<std::size_t>(i)] != f[static_cast<std::size_t>(n - i)]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Field operations over Q[x]

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

DivMod divmod(const UniPoly& f, const UniPoly& g);
/// Quotient q with f = q g exactly; NotDivisible otherwise.
UniPoly exact_div(const UniPoly& f, const UniPoly& g);
/// Monic gcd; gcd(0, 0) is 0.
UniPoly gcd(const UniPoly& f, const UniPoly& g);
UniPoly make_monic(const UniPoly& f);
/// Positive rational c such that f / c has coprime integer coefficients.
Scalar content(const UniPoly& f);
/// f / gcd(f, f'), made monic.
UniPoly square_free_part(const UniPoly& f);

/// h(x) = sum_i f_i x^i (1-x)^{n-i}; requires n >= deg f.
UniPoly f_to_h(const UniPoly& f, long n);

BiPoly lift_s(const UniPoly& f_in_t);
/// Replace s by a rational value, leaving a polynomial in t.
UniPoly substitute_s(const BiPoly& f, const Scalar& s);
/// Replace t by a rational value, leaving a polynomial in s.
UniPoly substitute_t(const BiPoly& f, const Scalar& t);

// ---------------------------------------------------------------------------
// Text format: whitespace-separated rationals, low to high; zero renders as "0".

std::string to_text(const UniPoly& f);
UniPoly parse_poly(std::string_view text);
std::vector<std::string> to_string_list(const UniPoly& f);
std::vector<std::string> to_string_list(const std::vector<Scalar>& v);

}  // namespace gammalab
