#include <gammalab/gamma.hpp>

namespace gammalab {

namespace {

Flag flag_of(bool b) { return b ? Flag::yes : Flag::no; }

UniPoly one_plus_x_pow(long k) { return linear_power(Scalar(1), Scalar(1), k); }

}  // namespace

std::string to_string(BasisSign s) { return s == BasisSign::plus ? "+" : "-"; }

std::string to_string(Flag f) {
  switch (f) {
    case Flag::yes:
      return "yes";
    case Flag::no:
      return "no";
    case Flag::not_applicable:
      break;
  }
  return "not_applicable";
}

GammaExpansion gamma_expand(const UniPoly& f, long n) {
  return {n, gamma_vector(f, n, BasisSign::plus), BasisSign::plus};
}

GammaExpansion alt_gamma_expand(const UniPoly& f, long n) {
  return {n, gamma_vector(f, n, BasisSign::minus), BasisSign::minus};
}

UniPoly reconstruct(const GammaExpansion& g) {
  UniPoly out;
  const Scalar x_sign = g.sign == BasisSign::plus ? 1 : -1;
  for (std::size_t k = 0; k < g.coeffs.size(); ++k) {
    const long exponent = g.center_degree - 2 * static_cast<long>(k);
    out += shift(one_plus_x_pow(exponent), k) * Scalar(g.coeffs[k] * power(x_sign, static_cast<long>(k)));
  }
  return out;
}

BinomialExpansion binomial_basis_expand(const UniPoly& f, long n, BasisSign sign) {
  if (f.degree_or(-1) > n) {
    throw DegreeTooSmall("binomial_basis_expand: frame " + std::to_string(n) + " is below degree " +
                         std::to_string(f.degree_or(-1)));
  }
  const Scalar b = sign == BasisSign::plus ? 1 : -1;
  BinomialExpansion e{n, {}, sign};
  UniPoly rem = f;
  for (long k = 0; k <= n; ++k) {
    Scalar c = rem[static_cast<std::size_t>(k)];
    if (!is_zero(c)) rem -= shift(linear_power(Scalar(1), b, n - k), static_cast<std::size_t>(k)) * c;
    e.coeffs.push_back(c);
  }
  if (!rem.is_zero()) throw InternalError("binomial peeling left a nonzero remainder");
  return e;
}

UniPoly reconstruct(const BinomialExpansion& e) {
  const Scalar b = e.sign == BasisSign::plus ? 1 : -1;
  UniPoly out;
  for (std::size_t k = 0; k < e.coeffs.size(); ++k) {
    out += shift(linear_power(Scalar(1), b, e.degree - static_cast<long>(k)), k) * e.coeffs[k];
  }
  return out;
}

std::vector<Scalar> eta_from_gamma(const GammaExpansion& gamma) {
  if (gamma.sign != BasisSign::plus) throw std::invalid_argument("eta_from_gamma: needs a plus-sign gamma vector");
  const long n = gamma.center_degree;
  std::vector<Scalar> eta;
  for (long k = 0; k <= n; ++k) {
    Scalar sum = 0;
    for (long i = 0; 2 * i <= k && i < static_cast<long>(gamma.coeffs.size()); ++i) {
      sum += Scalar(binomial(n - 2 * i, k - 2 * i)) * power(Scalar(2), k - 2 * i) * gamma.coeffs[static_cast<std::size_t>(i)];
    }
    eta.push_back(sum);
  }
  return eta;
}

std::vector<Scalar> xi_from_gamma(const GammaExpansion& gamma) {
  if (gamma.sign != BasisSign::plus) throw std::invalid_argument("xi_from_gamma: needs a plus-sign gamma vector");
  const long n = gamma.center_degree;
  std::vector<Scalar> xi;
  for (long k = 0; k <= n; ++k) {
    Scalar sum = 0;
    for (long i = 0; 2 * i <= k && i < static_cast<long>(gamma.coeffs.size()); ++i) {
      sum += Scalar(binomial(n - 2 * i, k - 2 * i)) * gamma.coeffs[static_cast<std::size_t>(i)];
    }
    xi.push_back(sum);
  }
  return xi;
}

HermiteBiehlerSplit hermite_biehler_split(const UniPoly& f) {
  std::vector<Scalar> even;
  std::vector<Scalar> odd;
  for (std::size_t i = 0; i < f.size(); ++i) (i % 2 == 0 ? even : odd).push_back(f.coeffs()[i]);
  return {UniPoly(std::move(even)), UniPoly(std::move(odd))};
}

SemiGammaDecomposition semi_gamma_decompose(const UniPoly& f) {
  if (f.is_zero()) throw NotDecomposable("zero polynomial has no semi-gamma decomposition");
  const long d = f.degree_or(0);
  SemiGammaDecomposition out;
  out.nu = static_cast<int>(d % 2);
  UniPoly g = f;
  if (out.nu == 1) {
    try {
      g = exact_div(f, UniPoly{1, 1});
    } catch (const NotDivisible&) {
      throw NotDecomposable("odd degree but (1+x) does not divide the polynomial");
    }
  }
  out.n = (d - out.nu) / 2;
  const auto split = hermite_biehler_split(g);
  out.f1 = split.even;
  out.f2 = split.odd;
  std::vector<Scalar> g1;
  std::vector<Scalar> g2;
  try {
    g1 = gamma_vector(out.f1, out.n, BasisSign::plus);
    g2 = gamma_vector(out.f2, out.n - 1, BasisSign::plus);
  } catch (const NotSymmetric& e) {
    throw NotDecomposable(std::string("even/odd part is not symmetric: ") + e.what());
  }
  for (long k = 0; k <= out.n; ++k) {
    const auto j = static_cast<std::size_t>(k / 2);
    out.lambda.push_back(k % 2 == 0 ? g1[j] : g2[j]);
  }
  return out;
}

UniPoly reconstruct(const SemiGammaDecomposition& d) {
  const UniPoly one_plus_x2{1, 0, 1};
  UniPoly inner;
  for (long k = 0; k <= d.n; ++k) {
    inner += shift(pow(one_plus_x2, static_cast<unsigned long>(d.n - k)), static_cast<std::size_t>(k)) *
             d.lambda[static_cast<std::size_t>(k)];
  }
  return inner * one_plus_x_pow(d.nu);
}

AltSemiGammaDecomposition alt_semi_gamma_expand(const SemiGammaDecomposition& d) {
  AltSemiGammaDecomposition out;
  out.nu = d.nu;
  out.n = d.n;
  out.xi = eta_from_gamma(gamma_expand(d.f1, d.n));
  if (d.n >= 1) out.zeta = eta_from_gamma(gamma_expand(d.f2, d.n - 1));
  return out;
}

AltSemiGammaDecomposition alt_semi_gamma_decompose(const UniPoly& f) {
  SemiGammaDecomposition d;
  try {
    d = semi_gamma_decompose(f);
  } catch (const NotDecomposable& e) {
    throw NotSemiGammaPositive(e.what());
  }
  if (!all_nonnegative(d.lambda)) throw NotSemiGammaPositive("f1 or f2 has a negative gamma coefficient");
  return alt_semi_gamma_expand(d);
}

UniPoly reconstruct(const AltSemiGammaDecomposition& d) {
  UniPoly out;
  for (std::size_t k = 0; k < d.xi.size(); ++k) {
    const long e = 2 * d.n - 2 * static_cast<long>(k) + d.nu;
    out += shift(one_plus_x_pow(e), k) * Scalar(d.xi[k] * power(Scalar(-1), static_cast<long>(k)));
  }
  for (std::size_t k = 0; k < d.zeta.size(); ++k) {
    const long e = 2 * d.n - 2 - 2 * static_cast<long>(k) + d.nu;
    out += shift(one_plus_x_pow(e), k + 1) * Scalar(d.zeta[k] * power(Scalar(-1), static_cast<long>(k)));
  }
  return out;
}

bool is_unimodal(const UniPoly& f, long n) {
  bool falling = false;
  for (long i = 1; i <= n; ++i) {
    const int c = cmp(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(i - 1)]);
    if (c < 0) falling = true;
    if (c > 0 && falling) return false;
  }
  return true;
}

bool all_nonnegative(const std::vector<Scalar>& v) {
  for (const auto& c : v) {
    if (sgn(c) < 0) return false;
  }
  return true;
}

PositivityProfile classify(const UniPoly& f, long n) {
  if (f.degree_or(-1) > n) {
    throw DegreeTooSmall("classify: frame " + std::to_string(n) + " is below degree " + std::to_string(f.degree_or(-1)));
  }
  PositivityProfile p;
  const bool symmetric = is_symmetric(f, n);
  p.symmetric = flag_of(symmetric);
  p.unimodal = flag_of(is_unimodal(f, n));
  if (symmetric) {
    p.gamma_positive = flag_of(all_nonnegative(gamma_vector(f, n, BasisSign::plus)));
    p.alt_gamma_positive = flag_of(all_nonnegative(gamma_vector(f, n, BasisSign::minus)));
  }

  if (f.is_zero()) {
    p.semi_gamma_positive = Flag::yes;
    p.alt_semi_gamma_positive = Flag::yes;
  } else {
    // Both semi notions are invariant under multiplication by x, so a leading
    // power of x is stripped before the parity-forced decomposition.
    std::size_t low = 0;
    while (is_zero(f.coeffs()[low])) ++low;
    const UniPoly g(std::vector<Scalar>(f.coeffs().begin() + static_cast<long>(low), f.coeffs().end()));
    try {
      const auto d = semi_gamma_decompose(g);
      p.semi_gamma_positive = flag_of(all_nonnegative(d.lambda));
      const auto alt = alt_semi_gamma_expand(d);
      p.alt_semi_gamma_positive = flag_of(all_nonnegative(alt.xi) && all_nonnegative(alt.zeta));
    } catch (const NotDecomposable&) {
      p.semi_gamma_positive = Flag::no;
      p.alt_semi_gamma_positive = Flag::no;
    }
  }

  const auto sd = symmetric_decomposition(f, n);
  p.bi_gamma_positive = flag_of(all_nonnegative(gamma_vector(sd.a, n, BasisSign::plus)) &&
                                all_nonnegative(gamma_vector(sd.b, n - 1, BasisSign::plus)));
  p.alt_bi_gamma_positive = flag_of(all_nonnegative(gamma_vector(sd.a, n, BasisSign::minus)) &&
                                    all_nonnegative(gamma_vector(sd.b, n - 1, BasisSign::minus)));
  return p;
}

}  // namespace gammalab
