#include <gammalab/errors.hpp>
#include <gammalab/scalar.hpp>

#include <cctype>
#include <string>

namespace gammalab {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den))) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  Scalar value;
  value.get_num() = Integer(std::string(num), 10);
  value.get_den() = den.empty() ? Integer(1) : Integer(std::string(den), 10);
  if (value.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  value.canonicalize();
  if (text.front() == '-') value = -value;
  return value;
}

std::string to_string(const Scalar& s) { return s.get_str(10); }

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(long n) {
  if (n < 0) return 0;
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer catalan(long n) {
  if (n < 0) return 0;
  return binomial(2 * n, n) / (n + 1);
}

Integer double_factorial_odd(long n) {
  Integer r = 1;
  for (long k = 1; k <= 2 * n - 1; k += 2) r *= k;
  return r;
}

Scalar power(const Scalar& base, long exponent) {
  Scalar result = 1;
  if (exponent < 0) return power(1 / base, -exponent);
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  result.canonicalize();
  return result;
}

}  // namespace gammalab
