#include <gammalab/gamma.hpp>
#include <gammalab/random_poly.hpp>

namespace gammalab {

long PolySampler::integer(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng_);
}

Scalar PolySampler::rational(long range, long max_den) {
  Scalar v(Integer(integer(-range, range)), Integer(integer(1, max_den)));
  v.canonicalize();
  return v;
}

UniPoly PolySampler::any(long n, long range, long max_den) {
  std::vector<Scalar> v;
  for (long i = 0; i <= n; ++i) v.push_back(rational(range, max_den));
  while (is_zero(v.back())) v.back() = rational(range, max_den);
  return UniPoly(std::move(v));
}

UniPoly PolySampler::symmetric(long n, long range, long max_den) {
  std::vector<Scalar> v(static_cast<std::size_t>(n) + 1);
  for (long i = 0; 2 * i <= n; ++i) {
    Scalar c = rational(range, max_den);
    if (i == 0) {
      while (is_zero(c)) c = rational(range, max_den);
    }
    v[static_cast<std::size_t>(i)] = c;
    v[static_cast<std::size_t>(n - i)] = c;
  }
  return UniPoly(std::move(v));
}

UniPoly PolySampler::gamma_positive(long n, long range) {
  GammaExpansion g{n, {}, BasisSign::plus};
  for (long k = 0; 2 * k <= n; ++k) g.coeffs.push_back(Scalar(k == 0 ? integer(1, range) : integer(0, range)));
  return reconstruct(g);
}

UniPoly PolySampler::alt_gamma_positive(long n, long range) {
  GammaExpansion g{n, {}, BasisSign::minus};
  for (long k = 0; 2 * k <= n; ++k) g.coeffs.push_back(Scalar(k == 0 ? integer(1, range) : integer(0, range)));
  return reconstruct(g);
}

UniPoly PolySampler::standard(long max_degree, long range) {
  UniPoly f = any(integer(0, max_degree), range);
  return sgn(f.leading()) < 0 ? -f : f;
}

}  // namespace gammalab
