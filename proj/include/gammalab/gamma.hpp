#pragma once

#include <gammalab/polynomial.hpp>

#include <string>
#include <vector>

namespace gammalab {

/// Selects x^k(1+x)^{n-2k} (plus) or (-x)^k(1+x)^{n-2k} (minus); for binomial
/// expansions, x^k(1+x)^{n-k} (plus) or x^k(1-x)^{n-k} (minus).
enum class BasisSign { plus, minus };

std::string to_string(BasisSign s);

struct GammaExpansion {
  long center_degree = 0;
  std::vector<Scalar> coeffs;  // k = 0 .. floor(n/2)
  BasisSign sign = BasisSign::plus;
};

struct BinomialExpansion {
  long degree = 0;
  std::vector<Scalar> coeffs;  // k = 0 .. n
  BasisSign sign = BasisSign::plus;
};

/// f = (1+x)^nu (f1(x^2) + x f2(x^2)) = (1+x)^nu sum_k lambda_k x^k (1+x^2)^{n-k}.
struct SemiGammaDecomposition {
  int nu = 0;
  long n = 0;
  std::vector<Scalar> lambda;
  UniPoly f1;
  UniPoly f2;
};

/// f = sum xi_k (-x)^k (1+x)^{2n-2k+nu} + x sum zeta_k (-x)^k (1+x)^{2n-2-2k+nu}.
struct AltSemiGammaDecomposition {
  int nu = 0;
  long n = 0;
  std::vector<Scalar> xi;
  std::vector<Scalar> zeta;
};

template <class Ring>
struct SymmetricDecomposition {
  Polynomial<Ring> a;  // symmetric about n
  Polynomial<Ring> b;  // symmetric about n - 1
  long degree = 0;
};

struct HermiteBiehlerSplit {
  UniPoly even;  // f^E
  UniPoly odd;   // f^O
};

enum class Flag { yes, no, not_applicable };
std::string to_string(Flag f);

struct PositivityProfile {
  Flag symmetric = Flag::not_applicable;
  Flag unimodal = Flag::not_applicable;
  Flag gamma_positive = Flag::not_applicable;
  Flag alt_gamma_positive = Flag::not_applicable;
  Flag semi_gamma_positive = Flag::not_applicable;
  Flag alt_semi_gamma_positive = Flag::not_applicable;
  Flag bi_gamma_positive = Flag::not_applicable;
  Flag alt_bi_gamma_positive = Flag::not_applicable;
};

// ---------------------------------------------------------------------------

/// Greedy peeling in the (+/-x)^k (1+x)^{n-2k} basis. The lowest surviving
/// coefficient of the remainder is always x^k, so each step is forced.
template <class Ring>
std::vector<Ring> gamma_vector(const Polynomial<Ring>& f, long n, BasisSign sign) {
  if (n < 0) {
    if (!f.is_zero()) throw DegreeTooSmall("gamma_vector: negative center for a nonzero polynomial");
    return {};
  }
  if (!is_symmetric(f, n)) throw NotSymmetric("polynomial is not symmetric about " + std::to_string(n));
  std::vector<Ring> out;
  Polynomial<Ring> rem = f;
  for (long k = 0; 2 * k <= n; ++k) {
    Ring c = rem[static_cast<std::size_t>(k)];
    if (sign == BasisSign::minus && (k % 2 == 1)) c = -c;
    if (!ring_traits<Ring>::is_zero(c)) {
      Polynomial<Ring> basis = shift(linear_power<Ring>(Scalar(1), Scalar(1), n - 2 * k), static_cast<std::size_t>(k));
      if (sign == BasisSign::minus && (k % 2 == 1)) basis = -basis;
      rem -= basis * c;
    }
    out.push_back(std::move(c));
  }
  if (!rem.is_zero()) throw InternalError("gamma peeling left a nonzero remainder");
  return out;
}

template <class Ring>
SymmetricDecomposition<Ring> symmetric_decomposition(const Polynomial<Ring>& f, long n) {
  const Polynomial<Ring> rev = reverse(f, n);  // x^n f(1/x)
  SymmetricDecomposition<Ring> d;
  d.degree = n;
  d.a = divide_by_one_minus_x(f - shift(rev, 1));
  d.b = divide_by_one_minus_x(rev - f);
  return d;
}

GammaExpansion gamma_expand(const UniPoly& f, long n);
GammaExpansion alt_gamma_expand(const UniPoly& f, long n);
UniPoly reconstruct(const GammaExpansion& g);

BinomialExpansion binomial_basis_expand(const UniPoly& f, long n, BasisSign sign);
UniPoly reconstruct(const BinomialExpansion& e);

/// eta_k = sum_i C(n-2i, k-2i) 2^{k-2i} gamma_i: the alternating gamma-vector of f(x^2).
std::vector<Scalar> eta_from_gamma(const GammaExpansion& gamma);
/// xi_k = sum_i C(n-2i, k-2i) gamma_i.
std::vector<Scalar> xi_from_gamma(const GammaExpansion& gamma);

HermiteBiehlerSplit hermite_biehler_split(const UniPoly& f);

SemiGammaDecomposition semi_gamma_decompose(const UniPoly& f);
UniPoly reconstruct(const SemiGammaDecomposition& d);

/// Canonical alternating pieces of a semi-gamma decomposition, without any sign requirement.
AltSemiGammaDecomposition alt_semi_gamma_expand(const SemiGammaDecomposition& d);
/// As above, but requires f1 and f2 to be gamma-positive.
AltSemiGammaDecomposition alt_semi_gamma_decompose(const UniPoly& f);
UniPoly reconstruct(const AltSemiGammaDecomposition& d);

/// Weakly rising then weakly falling over indices 0..n.
bool is_unimodal(const UniPoly& f, long n);
bool all_nonnegative(const std::vector<Scalar>& v);

PositivityProfile classify(const UniPoly& f, long n);

}  // namespace gammalab
