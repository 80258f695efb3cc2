#include <gammalab/families.hpp>
#include <gammalab/oracles.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

namespace gammalab {

namespace {

/// Insert-if-absent cache; values are pure functions of the key, so races only
/// duplicate work.
class Memo {
 public:
  template <class Compute>
  UniPoly get(FamilyId id, long n, Compute compute) {
    const auto key = std::make_pair(static_cast<int>(id), n);
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) return it->second;
    }
    UniPoly value = compute();
    std::lock_guard<std::mutex> lock(mutex_);
    return table_.emplace(key, std::move(value)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, long>, UniPoly> table_;
};

Memo& memo() {
  static Memo m;
  return m;
}

void require(bool ok, const char* what, long n) {
  if (!ok) throw std::invalid_argument(std::string(what) + ": index " + std::to_string(n) + " is out of range");
}

/// c(x) f + d(x) f'.
UniPoly step(const UniPoly& f, const UniPoly& c, const UniPoly& d) { return c * f + d * derivative(f); }

Scalar sc(long v) { return Scalar(v); }
Scalar sc(long num, long den) {
  Scalar v{Integer(num), Integer(den)};
  v.canonicalize();
  return v;
}

/// Divides by an integer and insists the result still has integer coefficients.
UniPoly divide_integral(const UniPoly& f, long divisor, const char* what) {
  UniPoly q = f * sc(1, divisor);
  for (const auto& c : q.coeffs()) {
    if (c.get_den() != 1) throw InternalError(std::string(what) + ": recurrence division left a fraction");
  }
  return q;
}

}  // namespace

const std::vector<FamilyId>& all_families() {
  static const std::vector<FamilyId> ids = {
      FamilyId::EULERIAN_A, FamilyId::EULERIAN_B, FamilyId::NARAYANA_A, FamilyId::NARAYANA_B,
      FamilyId::NARAYANA_D, FamilyId::PEAK,       FamilyId::LEFT_PEAK,  FamilyId::L_POLY,
      FamilyId::LHAT_POLY,  FamilyId::A_SMALL,    FamilyId::B_SMALL,    FamilyId::ALPHA,
      FamilyId::BETA,       FamilyId::FLAG_AP,    FamilyId::BOROS_MOLL, FamilyId::Q_POLY,
      FamilyId::CYCLOTOMIC, FamilyId::BIV_DES_EXC};
  return ids;
}

std::string family_name(FamilyId id) {
  switch (id) {
    case FamilyId::EULERIAN_A: return "eulerian_a";
    case FamilyId::EULERIAN_B: return "eulerian_b";
    case FamilyId::NARAYANA_A: return "narayana_a";
    case FamilyId::NARAYANA_B: return "narayana_b";
    case FamilyId::NARAYANA_D: return "narayana_d";
    case FamilyId::PEAK: return "peak";
    case FamilyId::LEFT_PEAK: return "left_peak";
    case FamilyId::L_POLY: return "l_poly";
    case FamilyId::LHAT_POLY: return "lhat_poly";
    case FamilyId::A_SMALL: return "a_small";
    case FamilyId::B_SMALL: return "b_small";
    case FamilyId::ALPHA: return "alpha";
    case FamilyId::BETA: return "beta";
    case FamilyId::FLAG_AP: return "flag_ap";
    case FamilyId::BOROS_MOLL: return "boros_moll";
    case FamilyId::Q_POLY: return "q_poly";
    case FamilyId::CYCLOTOMIC: return "cyclotomic";
    case FamilyId::BIV_DES_EXC: return "biv_des_exc";
  }
  throw InternalError("unknown family id");
}

std::optional<FamilyId> family_from_name(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  for (FamilyId id : all_families()) {
    if (family_name(id) == lower) return id;
  }
  return std::nullopt;
}

UniPoly eulerian_a(long n) {
  require(n >= 0, "eulerian_a", n);
  return memo().get(FamilyId::EULERIAN_A, n, [n] {
    if (n == 0) return UniPoly::one();
    return step(eulerian_a(n - 1), UniPoly{sc(1), sc(n - 1)}, UniPoly{0, 1, -1});
  });
}

UniPoly eulerian_b(long n) {
  require(n >= 0, "eulerian_b", n);
  return memo().get(FamilyId::EULERIAN_B, n, [n] {
    if (n == 0) return UniPoly::one();
    return step(eulerian_b(n - 1), UniPoly{sc(1), sc(2 * n - 1)}, UniPoly{0, 2, -2});
  });
}

UniPoly narayana(NarayanaType type, long n) {
  switch (type) {
    case NarayanaType::A:
      require(n >= 0, "narayana A", n);
      return memo().get(FamilyId::NARAYANA_A, n, [n] {
        std::vector<Scalar> c;
        for (long k = 0; k <= n; ++k) {
          Scalar v(Integer(binomial(n + 1, k + 1) * binomial(n + 1, k)), Integer(n + 1));
          v.canonicalize();
          c.push_back(v);
        }
        return UniPoly(std::move(c));
      });
    case NarayanaType::B:
      require(n >= 0, "narayana B", n);
      return memo().get(FamilyId::NARAYANA_B, n, [n] {
        std::vector<Scalar> c;
        for (long k = 0; k <= n; ++k) {
          const Integer b = binomial(n, k);
          c.emplace_back(Scalar(b * b));
        }
        return UniPoly(std::move(c));
      });
    case NarayanaType::D:
      if (n < 2) throw TypeDRange("narayana D needs n >= 2, got " + std::to_string(n));
      return memo().get(FamilyId::NARAYANA_D, n, [n] {
        return narayana(NarayanaType::B, n) - shift(narayana(NarayanaType::A, n - 2), 1) * sc(n);
      });
  }
  throw InternalError("unknown Narayana type");
}

UniPoly peak_poly(long n) {
  require(n >= 1, "peak_poly", n);
  return memo().get(FamilyId::PEAK, n, [n] {
    if (n == 1) return UniPoly::one();
    const long m = n - 1;
    return step(peak_poly(m), UniPoly{sc(2), sc(m - 1)}, UniPoly{0, 2, -2});
  });
}

UniPoly left_peak_poly(long n) {
  require(n >= 0, "left_peak_poly", n);
  return memo().get(FamilyId::LEFT_PEAK, n, [n] {
    if (n == 0) return UniPoly::one();
    const long m = n - 1;
    return step(left_peak_poly(m), UniPoly{sc(1), sc(m)}, UniPoly{0, 2, -2});
  });
}

UniPoly l_poly(long n) {
  require(n >= 1, "l_poly", n);
  return memo().get(FamilyId::L_POLY, n, [n] {
    if (n == 1) return UniPoly::one();
    const UniPoly raw = step(l_poly(n - 1), UniPoly{sc(n), sc(2), sc(3 * n - 4)}, UniPoly{0, 1, 0, -1});
    return divide_integral(raw, n, "l_poly");
  });
}

UniPoly lhat_poly(long n) {
  require(n >= 0, "lhat_poly", n);
  return memo().get(FamilyId::LHAT_POLY, n, [n] {
    if (n == 0) return UniPoly::one();
    const UniPoly raw = step(lhat_poly(n - 1), UniPoly{sc(n), sc(1), sc(3 * n - 3)}, UniPoly{0, 1, 0, -1});
    return divide_integral(raw, n, "lhat_poly");
  });
}

UniPoly ab_poly(AbKind kind, long n) {
  switch (kind) {
    case AbKind::a:
      require(n >= 1, "a_n", n);
      return memo().get(FamilyId::A_SMALL, n, [n] {
        if (n == 1) return UniPoly::one();
        const long m = n - 1;
        return step(ab_poly(AbKind::a, m), UniPoly{sc(1), sc(3 - m)}, UniPoly{sc(0), sc(1, 2), sc(2)});
      });
    case AbKind::b:
      require(n >= 0, "b_n", n);
      return memo().get(FamilyId::B_SMALL, n, [n] {
        if (n == 0) return UniPoly::one();
        const long m = n - 1;
        return step(ab_poly(AbKind::b, m), UniPoly{sc(1), sc(2 - 2 * m)}, UniPoly{0, 1, 4});
      });
    case AbKind::alpha:
      require(n >= 1, "alpha_n", n);
      return memo().get(FamilyId::ALPHA, n, [n] {
        if (n == 1) return UniPoly::one();
        const long m = n - 1;
        // 1 + x + (m-1)x(3x-1)/2 and x(1-x)(1+3x)/2
        const UniPoly c{sc(1), Scalar(1 - sc(m - 1, 2)), sc(3 * (m - 1), 2)};
        const UniPoly d{sc(0), sc(1, 2), sc(1), sc(-3, 2)};
        return step(ab_poly(AbKind::alpha, m), c, d);
      });
    case AbKind::beta:
      require(n >= 0, "beta_n", n);
      return memo().get(FamilyId::BETA, n, [n] {
        if (n == 0) return UniPoly::one();
        const long m = n - 1;
        return step(ab_poly(AbKind::beta, m), UniPoly{sc(1), sc(1 - m), sc(3 * m)}, UniPoly{0, 1, 2, -3});
      });
  }
  throw InternalError("unknown a/b kind");
}

UniPoly flag_ap_poly(long n) {
  require(n >= 0, "flag_ap_poly", n);
  return memo().get(FamilyId::FLAG_AP, n, [n] {
    if (n == 0) return UniPoly::one();
    const long m = n - 1;
    return step(flag_ap_poly(m), UniPoly{sc(0), sc(1), sc(2 * m)}, UniPoly{0, 1, 0, -1});
  });
}

UniPoly boros_moll(long m) {
  require(m >= 0, "boros_moll", m);
  return memo().get(FamilyId::BOROS_MOLL, m, [m] {
    std::vector<Scalar> d;
    const Scalar scale = power(Scalar(2), -2 * m);
    for (long i = 0; i <= m; ++i) {
      Integer sum = 0;
      for (long k = i; k <= m; ++k) {
        Integer term = binomial(2 * m - 2 * k, m - k) * binomial(m + k, k) * binomial(k, i);
        mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
        sum += term;
      }
      d.emplace_back(Scalar(sum) * scale);
    }
    return UniPoly(std::move(d));
  });
}

UniPoly boros_moll_by_recurrence(long m) {
  require(m >= 0, "boros_moll_by_recurrence", m);
  std::vector<Scalar> d{Scalar(1)};
  for (long k = 0; k < m; ++k) {
    std::vector<Scalar> next(static_cast<std::size_t>(k) + 2);
    for (long i = 0; i <= k + 1; ++i) {
      const Scalar prev = i >= 1 ? d[static_cast<std::size_t>(i - 1)] : Scalar(0);
      const Scalar cur = i <= k ? d[static_cast<std::size_t>(i)] : Scalar(0);
      next[static_cast<std::size_t>(i)] = (Scalar(2 * (k + i)) * prev + Scalar(4 * k + 2 * i + 3) * cur) / Scalar(2 * (k + 1));
    }
    d = std::move(next);
  }
  return UniPoly(std::move(d));
}

UniPoly q_poly(long m) {
  require(m >= 0, "q_poly", m);
  return memo().get(FamilyId::Q_POLY, m, [m] {
    if (m == 0) return UniPoly::one();
    const long k = m - 1;
    const UniPoly prev = q_poly(k);
    return prev * UniPoly{sc(2 * (2 * k + 1)), sc(3 * (2 * k + 1))} - UniPoly{0, 2, 2} * derivative(prev);
  });
}

UniPoly q_from_boros_moll(long m) {
  require(m >= 0, "q_from_boros_moll", m);
  Integer scale = factorial(m);
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), static_cast<mp_bitcnt_t>(m));
  return reverse(boros_moll(m), m) * Scalar(scale);
}

UniPoly cyclotomic(long n) {
  require(n >= 1, "cyclotomic", n);
  return memo().get(FamilyId::CYCLOTOMIC, n, [n] {
    if (n == 1) return UniPoly{-1, 1};
    UniPoly q = UniPoly::monomial(Scalar(1), static_cast<std::size_t>(n)) - UniPoly::one();
    for (long d = 1; d < n; ++d) {
      if (n % d == 0) q = exact_div(q, cyclotomic(d));
    }
    return q;
  });
}

BiPoly biv_des_exc(long n, long bound) {
  require(n >= 1, "biv_des_exc", n);
  EnumOptions opts;
  opts.bound = bound;
  return des_exc_polynomial(n, opts);
}

UniPoly family(FamilyId id, long n) {
  switch (id) {
    case FamilyId::EULERIAN_A: return eulerian_a(n);
    case FamilyId::EULERIAN_B: return eulerian_b(n);
    case FamilyId::NARAYANA_A: return narayana(NarayanaType::A, n);
    case FamilyId::NARAYANA_B: return narayana(NarayanaType::B, n);
    case FamilyId::NARAYANA_D: return narayana(NarayanaType::D, n);
    case FamilyId::PEAK: return peak_poly(n);
    case FamilyId::LEFT_PEAK: return left_peak_poly(n);
    case FamilyId::L_POLY: return l_poly(n);
    case FamilyId::LHAT_POLY: return lhat_poly(n);
    case FamilyId::A_SMALL: return ab_poly(AbKind::a, n);
    case FamilyId::B_SMALL: return ab_poly(AbKind::b, n);
    case FamilyId::ALPHA: return ab_poly(AbKind::alpha, n);
    case FamilyId::BETA: return ab_poly(AbKind::beta, n);
    case FamilyId::FLAG_AP: return flag_ap_poly(n);
    case FamilyId::BOROS_MOLL: return boros_moll(n);
    case FamilyId::Q_POLY: return q_poly(n);
    case FamilyId::CYCLOTOMIC: return cyclotomic(n);
    case FamilyId::BIV_DES_EXC: break;
  }
  throw std::invalid_argument("family: biv_des_exc is bivariate");
}

UniPoly l_closed(long n) {
  require(n >= 1, "l_closed", n);
  std::vector<Scalar> c;
  for (long k = 0; k <= 2 * n - 2; ++k) c.emplace_back(Scalar(binomial(n - 1, (k + 1) / 2) * binomial(n - 1, k / 2)));
  return UniPoly(std::move(c));
}

UniPoly lhat_closed(long n) {
  require(n >= 1, "lhat_closed", n);
  std::vector<Scalar> c;
  for (long k = 0; k <= 2 * n - 1; ++k) c.emplace_back(Scalar(binomial(n, (k + 1) / 2) * binomial(n - 1, k / 2)));
  return UniPoly(std::move(c));
}

namespace {

/// scale * sum_k 4^k p_k x^{2k} (1 + b x)^{top - 2k}.
UniPoly peak_transform(const UniPoly& p, long top, const Scalar& b, const Scalar& scale) {
  UniPoly out;
  for (std::size_t k = 0; k < p.size(); ++k) {
    const long kk = static_cast<long>(k);
    const Scalar w = power(Scalar(4), kk) * p.coeffs()[k];
    out += shift(linear_power(Scalar(1), b, top - 2 * kk), 2 * k) * w;
  }
  return out * scale;
}

}  // namespace

UniPoly a_closed(long n) {
  require(n >= 1, "a_closed", n);
  return peak_transform(peak_poly(n), n - 1, Scalar(2), power(Scalar(2), 1 - n));
}

UniPoly b_closed(long n) {
  require(n >= 0, "b_closed", n);
  return peak_transform(left_peak_poly(n), n, Scalar(2), Scalar(1));
}

UniPoly alpha_closed(long n) {
  require(n >= 1, "alpha_closed", n);
  return peak_transform(peak_poly(n), n - 1, Scalar(1), power(Scalar(2), 1 - n));
}

UniPoly beta_closed(long n) {
  require(n >= 0, "beta_closed", n);
  return peak_transform(left_peak_poly(n), n, Scalar(1), Scalar(1));
}

UniPoly mn_combination(long n) {
  require(n >= 1, "mn_combination", n);
  return power_substitute(narayana(NarayanaType::B, n), 2) +
         shift(power_substitute(narayana(NarayanaType::A, n - 1), 2), 1) * Scalar(n + 1);
}

const FamilyProvider& default_family_provider() {
  static const FamilyProvider provider;
  return provider;
}

}  // namespace gammalab
