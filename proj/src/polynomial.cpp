#include <gammalab/polynomial.hpp>

#include <sstream>

namespace gammalab {

DivMod divmod(const UniPoly& f, const UniPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("divmod: division by the zero polynomial");
  if (f.degree_or(-1) < g.degree_or(-1)) return {UniPoly(), f};
  std::vector<Scalar> rem = f.coeffs();
  const std::size_t dg = g.size() - 1;
  std::vector<Scalar> quot(rem.size() - dg, Scalar(0));
  const Scalar lead = g.leading();
  for (std::size_t i = rem.size(); i-- > dg;) {
    if (is_zero(rem[i])) continue;
    Scalar q = rem[i] / lead;
    const std::size_t shift_by = i - dg;
    for (std::size_t j = 0; j <= dg; ++j) rem[shift_by + j] -= q * g.coeffs()[j];
    quot[shift_by] = q;
  }
  rem.resize(dg);
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly exact_div(const UniPoly& f, const UniPoly& g) {
  auto [q, r] = divmod(f, g);
  if (!r.is_zero()) {
    throw NotDivisible("(" + to_text(f) + ") is not divisible by (" + to_text(g) + "), remainder " + to_text(r));
  }
  return q;
}

UniPoly make_monic(const UniPoly& f) {
  if (f.is_zero()) return f;
  return f * Scalar(1 / f.leading());
}

UniPoly gcd(const UniPoly& f, const UniPoly& g) {
  UniPoly a = f;
  UniPoly b = g;
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).remainder;
    a = std::move(b);
    b = make_monic(r);
  }
  return make_monic(a);
}

Scalar content(const UniPoly& f) {
  if (f.is_zero()) return 1;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& c : f.coeffs()) {
    if (is_zero(c)) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  Scalar c(num_gcd, den_lcm);
  c.canonicalize();
  return abs(c);
}

UniPoly square_free_part(const UniPoly& f) {
  if (f.degree_or(0) == 0) return make_monic(f);
  return make_monic(exact_div(f, gcd(f, derivative(f))));
}

UniPoly f_to_h(const UniPoly& f, long n) {
  if (f.degree_or(-1) > n) {
    throw DegreeTooSmall("f_to_h: dimension " + std::to_string(n) + " is below degree " +
                         std::to_string(f.degree_or(-1)));
  }
  UniPoly h;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (is_zero(f.coeffs()[i])) continue;
    h += shift(linear_power(Scalar(1), Scalar(-1), n - static_cast<long>(i)), i) * f.coeffs()[i];
  }
  return h;
}

BiPoly lift_s(const UniPoly& f_in_t) {
  std::vector<UniPoly> v;
  v.reserve(f_in_t.size());
  for (const auto& c : f_in_t.coeffs()) v.push_back(UniPoly::constant(c));
  return BiPoly(std::move(v));
}

UniPoly substitute_s(const BiPoly& f, const Scalar& s) {
  std::vector<Scalar> v;
  v.reserve(f.size());
  for (const auto& c : f.coeffs()) v.push_back(eval(c, s));
  return UniPoly(std::move(v));
}

UniPoly substitute_t(const BiPoly& f, const Scalar& t) {
  return eval(f, UniPoly::constant(t));
}

std::string to_text(const UniPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i > 0) out += ' ';
    out += to_string(f.coeffs()[i]);
  }
  return out;
}

UniPoly parse_poly(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<Scalar> v;
  std::string token;
  while (in >> token) v.push_back(parse_scalar(token));
  if (v.empty()) throw ParseError("empty polynomial text");
  return UniPoly(std::move(v));
}

std::vector<std::string> to_string_list(const UniPoly& f) { return to_string_list(f.coeffs()); }

std::vector<std::string> to_string_list(const std::vector<Scalar>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& c : v) out.push_back(to_string(c));
  return out;
}

}  // namespace gammalab
