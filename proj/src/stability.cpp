#include <gammalab/gamma.hpp>
#include <gammalab/stability.hpp>

namespace gammalab {

namespace {

int sign_at(const UniPoly& p, const ExtScalar& at) {
  if (p.is_zero()) return 0;
  switch (at.kind) {
    case ExtScalar::Kind::finite:
      return sgn(eval(p, at.value));
    case ExtScalar::Kind::pos_inf:
      return sgn(p.leading());
    case ExtScalar::Kind::neg_inf:
      return (p.degree_or(0) % 2 == 0 ? 1 : -1) * sgn(p.leading());
  }
  return 0;
}

bool less(const ExtScalar& a, const ExtScalar& b) {
  using K = ExtScalar::Kind;
  if (a.kind == K::pos_inf || b.kind == K::neg_inf) return false;
  if (a.kind == K::neg_inf || b.kind == K::pos_inf) return true;
  return a.value < b.value;
}

std::vector<UniPoly> sturm_chain(const UniPoly& g) {
  std::vector<UniPoly> chain{g, derivative(g)};
  while (!chain.back().is_zero()) {
    const auto& a = chain[chain.size() - 2];
    const auto& b = chain.back();
    chain.push_back(-divmod(a, b).remainder);
  }
  chain.pop_back();
  return chain;
}

long variations(const std::vector<UniPoly>& chain, const ExtScalar& at) {
  long count = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = sign_at(p, at);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

/// Multiplicity of the single distinct root of f in (lo, hi], read off the
/// chain h_0 = f, h_{j+1} = gcd(h_j, h_j').
long multiplicity_in(const UniPoly& f, const Scalar& lo, const Scalar& hi) {
  long mult = 0;
  UniPoly h = f;
  while (h.degree_or(0) >= 1) {
    if (sturm_real_root_count(h, ExtScalar::of(lo), ExtScalar::of(hi)) == 0) break;
    ++mult;
    h = gcd(h, derivative(h));
  }
  return mult;
}

void require_standard(const UniPoly& p, const char* what) {
  if (p.is_zero() || sgn(p.leading()) <= 0) {
    throw NotStandard(std::string(what) + " is not standard (needs a positive leading coefficient)");
  }
}

}  // namespace

long sturm_real_root_count(const UniPoly& f, const ExtScalar& lo, const ExtScalar& hi) {
  if (f.is_zero()) throw std::invalid_argument("sturm_real_root_count: zero polynomial");
  if (!less(lo, hi)) throw std::invalid_argument("sturm_real_root_count: needs lo < hi");
  UniPoly g = square_free_part(f);
  long extra = 0;
  // Roots sitting exactly on an endpoint are divided out, which keeps the count exact.
  if (lo.kind == ExtScalar::Kind::finite && is_zero(eval(g, lo.value))) g = exact_div(g, UniPoly{-lo.value, 1});
  if (hi.kind == ExtScalar::Kind::finite && is_zero(eval(g, hi.value))) {
    g = exact_div(g, UniPoly{-hi.value, 1});
    extra = 1;
  }
  if (g.degree_or(0) == 0) return extra;
  const auto chain = sturm_chain(g);
  return variations(chain, lo) - variations(chain, hi) + extra;
}

long RootIsolation::total_multiplicity() const {
  long total = 0;
  for (const auto& iv : intervals) total += iv.multiplicity;
  return total;
}

RootIsolation isolate_real_roots(const UniPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  RootIsolation out;
  const UniPoly g = square_free_part(f);
  if (g.degree_or(0) == 0) return out;

  // Cauchy bound: every root satisfies |r| < 1 + max |a_i / a_n|.
  Scalar bound = 0;
  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    const Scalar r = abs(g.coeffs()[i] / g.leading());
    if (r > bound) bound = r;
  }
  bound += 1;

  std::vector<std::pair<Scalar, Scalar>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    const long count = sturm_real_root_count(g, ExtScalar::of(lo), ExtScalar::of(hi));
    if (count == 0) continue;
    if (count == 1) {
      out.intervals.push_back({lo, hi, 0});
      continue;
    }
    const Scalar mid = (lo + hi) / 2;
    stack.emplace_back(lo, mid);
    stack.emplace_back(mid, hi);
  }
  std::sort(out.intervals.begin(), out.intervals.end(),
            [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  for (auto& iv : out.intervals) iv.multiplicity = multiplicity_in(f, iv.lo, iv.hi);
  return out;
}

bool is_real_rooted(const UniPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("is_real_rooted: zero polynomial");
  return isolate_real_roots(f).total_multiplicity() == f.degree_or(0);
}

std::string to_string(Interlacing r) {
  switch (r) {
    case Interlacing::interlaces: return "interlaces";
    case Interlacing::alternates_left: return "alternates_left";
    case Interlacing::neither: break;
  }
  return "neither";
}

Interlacing interlacing_relation(const UniPoly& p, const UniPoly& q) {
  require_standard(p, "p");
  require_standard(q, "q");
  if (!is_real_rooted(p)) throw NotRealRooted("p is not real-rooted");
  if (!is_real_rooted(q)) throw NotRealRooted("q is not real-rooted");
  const long dp = p.degree_or(0);
  const long dq = q.degree_or(0);
  if (dq != dp && dq != dp + 1) return Interlacing::neither;

  // Rank every root by its position among the distinct roots of pq; common
  // roots then share a rank and satisfy the weak inequalities as equalities.
  std::vector<long> xi;
  std::vector<long> theta;
  const auto joint = isolate_real_roots(p * q);
  for (std::size_t r = 0; r < joint.intervals.size(); ++r) {
    const auto& iv = joint.intervals[r];
    const long mp = p.degree_or(0) > 0 ? multiplicity_in(p, iv.lo, iv.hi) : 0;
    const long mq = q.degree_or(0) > 0 ? multiplicity_in(q, iv.lo, iv.hi) : 0;
    xi.insert(xi.end(), static_cast<std::size_t>(mp), static_cast<long>(r));
    theta.insert(theta.end(), static_cast<std::size_t>(mq), static_cast<long>(r));
  }

  const std::size_t n = xi.size();
  if (dq == dp + 1) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!(theta[i] <= xi[i] && xi[i] <= theta[i + 1])) return Interlacing::neither;
    }
    return Interlacing::interlaces;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(xi[i] <= theta[i])) return Interlacing::neither;
    if (i + 1 < n && !(theta[i] <= xi[i + 1])) return Interlacing::neither;
  }
  return Interlacing::alternates_left;
}

std::string to_string(HurwitzStatus s) {
  switch (s) {
    case HurwitzStatus::stable: return "stable";
    case HurwitzStatus::weakly_stable_only: return "weakly_stable_only";
    case HurwitzStatus::unstable: break;
  }
  return "unstable";
}

HurwitzVerdict hurwitz_classify(const UniPoly& f) {
  if (f.is_zero()) throw NotStandard("zero polynomial has no stability class");
  std::string note;
  UniPoly g = f;
  if (sgn(g.leading()) < 0) {
    g = -g;
    note = "negated to make it standard; ";
  }
  if (g.degree_or(0) == 0) return {HurwitzStatus::stable, note + "positive constant"};

  const auto split = hermite_biehler_split(g);
  // Standard, real-rooted, and no zero in (0, inf).
  auto part_ok = [](const UniPoly& p, const char* name, std::string& why) {
    if (sgn(p.leading()) <= 0) {
      why = std::string(name) + " is not standard";
      return false;
    }
    if (!is_real_rooted(p)) {
      why = std::string(name) + " is not real-rooted";
      return false;
    }
    if (p.degree_or(0) > 0 && sturm_real_root_count(p, ExtScalar::of(0), ExtScalar::pos_infinity()) > 0) {
      why = std::string(name) + " has a positive zero";
      return false;
    }
    return true;
  };

  std::string why;
  if (split.odd.is_zero() || split.even.is_zero()) {
    const bool odd_missing = split.odd.is_zero();
    const UniPoly& part = odd_missing ? split.even : split.odd;
    if (!part_ok(part, odd_missing ? "f^E" : "f^O", why)) return {HurwitzStatus::unstable, note + why};
    return {HurwitzStatus::weakly_stable_only,
            note + (odd_missing ? "f^O = 0" : "f^E = 0") + ", so the interlacing clause is vacuous; weakly stable at best"};
  }
  if (!part_ok(split.even, "f^E", why) || !part_ok(split.odd, "f^O", why)) {
    return {HurwitzStatus::unstable, note + why};
  }
  const Interlacing rel = interlacing_relation(split.odd, split.even);
  if (rel == Interlacing::neither) {
    return {HurwitzStatus::unstable, note + "f^O neither interlaces nor alternates left of f^E"};
  }
  std::string cert = note + "f^E, f^O standard with nonpositive real zeros; f^O " + to_string(rel) + " f^E";
  if (is_zero(g.coeffs()[0])) return {HurwitzStatus::weakly_stable_only, cert + "; f(0) = 0"};
  if (gcd(split.even, split.odd).degree_or(0) > 0) {
    return {HurwitzStatus::weakly_stable_only, cert + "; gcd(f^E, f^O) is nontrivial"};
  }
  return {HurwitzStatus::stable, cert + "; f(0) != 0 and gcd(f^E, f^O) = 1"};
}

std::string to_string(RouthResult r) {
  switch (r) {
    case RouthResult::stable: return "stable";
    case RouthResult::not_stable: return "not_stable";
    case RouthResult::indeterminate: break;
  }
  return "indeterminate";
}

RouthResult routh_stable(const UniPoly& f) {
  if (f.is_zero()) throw NotStandard("zero polynomial has no stability class");
  const UniPoly g = sgn(f.leading()) < 0 ? -f : f;
  const long n = g.degree_or(0);
  auto coeff = [&](long i) { return i >= 0 ? g[static_cast<std::size_t>(i)] : Scalar(0); };

  std::vector<std::vector<Scalar>> rows(2);
  for (long i = n; i >= 0; i -= 2) rows[0].push_back(coeff(i));
  for (long i = n - 1; i >= 0; i -= 2) rows[1].push_back(coeff(i));
  auto get = [](const std::vector<Scalar>& row, std::size_t j) { return j < row.size() ? row[j] : Scalar(0); };

  for (long k = 0; k <= n; ++k) {
    if (k >= 2) {
      const auto& up = rows[static_cast<std::size_t>(k - 2)];
      const auto& mid = rows[static_cast<std::size_t>(k - 1)];
      std::vector<Scalar> row;
      const std::size_t len = static_cast<std::size_t>((n - k) / 2 + 1);
      for (std::size_t j = 0; j < len; ++j) {
        row.push_back((mid[0] * get(up, j + 1) - up[0] * get(mid, j + 1)) / mid[0]);
      }
      rows.push_back(std::move(row));
    }
    const Scalar pivot = get(rows[static_cast<std::size_t>(k)], 0);
    if (sgn(pivot) < 0) return RouthResult::not_stable;
    if (sgn(pivot) == 0) return RouthResult::indeterminate;
  }
  return RouthResult::stable;
}

}  // namespace gammalab
