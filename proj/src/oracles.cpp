#include <gammalab/oracles.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_set>

namespace gammalab {

namespace {

using Counts = std::vector<std::uint64_t>;

void check_bound(long n, long bound, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": n must be >= 0");
  if (n > bound) {
    throw BoundExceeded(std::string(what) + ": n = " + std::to_string(n) + " exceeds the enumeration bound " +
                        std::to_string(bound));
  }
}

/// Histogram of key(pi) over S_n. Each thread owns a set of first letters and
/// its own histogram; the merge is a plain sum, so the thread count cannot
/// change the result.
Counts histogram(long n, const EnumOptions& opts, std::size_t size,
                 const std::function<std::size_t(const PermWord&)>& key) {
  Counts total(size, 0);
  if (n == 0) {
    ++total.at(key(PermWord{}));
    return total;
  }
  const unsigned threads = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(n)));
  std::vector<Counts> partial(threads, Counts(size, 0));
  auto work = [&](unsigned t) {
    for (long first = 1 + static_cast<long>(t); first <= n; first += static_cast<long>(threads)) {
      PermWord w;
      w.push_back(static_cast<int>(first));
      for (int v = 1; v <= n; ++v) {
        if (v != first) w.push_back(v);
      }
      do {
        ++partial[t].at(key(w));
      } while (std::next_permutation(w.begin() + 1, w.end()));
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (const auto& p : partial) {
    for (std::size_t i = 0; i < size; ++i) total[i] += p[i];
  }
  return total;
}

UniPoly from_counts(const Counts& c) {
  std::vector<Scalar> v;
  v.reserve(c.size());
  for (auto x : c) v.emplace_back(Scalar(Integer(std::to_string(x))));
  return UniPoly(std::move(v));
}

std::uint64_t encode(const PermWord& w) {
  std::uint64_t code = 0;
  for (int v : w) code = (code << 4) | static_cast<std::uint64_t>(v);
  return code;
}

}  // namespace

void validate_perm(const PermWord& pi) {
  std::vector<bool> seen(pi.size() + 1, false);
  for (int v : pi) {
    if (v < 1 || static_cast<std::size_t>(v) > pi.size() || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of 1..n: " + perm_to_string(pi));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

StatRecord perm_stats(const PermWord& pi) {
  const long n = static_cast<long>(pi.size());
  const long inf = n + 1;
  std::vector<long> e(static_cast<std::size_t>(n) + 2, inf);
  for (long i = 1; i <= n; ++i) e[static_cast<std::size_t>(i)] = pi[static_cast<std::size_t>(i - 1)];
  auto at = [&](long i) { return e[static_cast<std::size_t>(i)]; };

  StatRecord r;
  for (long i = 1; i <= n; ++i) {
    const long prev = at(i - 1);
    const long cur = at(i);
    const long next = at(i + 1);
    if (cur > next) {
      ++r.des;
      r.maj += i;
    }
    if (cur < next) ++r.asc;
    if (prev < cur && cur > next) ++r.pk;
    if (prev > cur && cur < next) ++r.val;
    if (prev > cur && cur > next) ++r.ddes;
    if (prev < cur && cur < next) ++r.dasc;
  }
  for (long i = 1; i <= n - 1; ++i) {
    const long left = i == 1 ? 0 : at(i - 1);
    if (left < at(i) && at(i) > at(i + 1)) ++r.lpk;
    if (at(i) > i) ++r.exc;
  }
  return r;
}

void for_each_permutation(long n, const std::function<void(const PermWord&)>& visit) {
  if (n < 0) throw std::invalid_argument("for_each_permutation: n must be >= 0");
  PermWord w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    visit(w);
  } while (std::next_permutation(w.begin(), w.end()));
}

UniPoly stat_polynomial(long n, Weight w, const EnumOptions& opts) {
  check_bound(n, opts.bound, "stat_polynomial");
  if (w == Weight::complement_dasc && n == 0) throw std::invalid_argument("x^{n-1-dasc} needs n >= 1");
  const std::size_t size = 2 * static_cast<std::size_t>(n) + 1;
  auto key = [n, w](const PermWord& pi) -> std::size_t {
    const StatRecord r = perm_stats(pi);
    switch (w) {
      case Weight::des: return static_cast<std::size_t>(r.des);
      case Weight::pk: return static_cast<std::size_t>(r.pk);
      case Weight::lpk:
      case Weight::beta: return static_cast<std::size_t>(r.lpk);
      case Weight::pk_plus_des: return static_cast<std::size_t>(r.pk + r.des);
      case Weight::complement_dasc: return static_cast<std::size_t>(n - 1 - r.dasc);
      case Weight::two_des: return static_cast<std::size_t>(2 * r.des);
    }
    return 0;
  };
  const Counts c = histogram(n, opts, size, key);
  if (w != Weight::beta) return from_counts(c);
  UniPoly out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    const long kk = static_cast<long>(k);
    const UniPoly term = UniPoly::monomial(power(Scalar(2), 2 * kk), 2 * k) * linear_power(Scalar(1), Scalar(1), n - 2 * kk);
    out += term * Scalar(Integer(std::to_string(c[k])));
  }
  return out;
}

std::vector<Scalar> gamma_count(long n, const EnumOptions& opts) {
  check_bound(n, opts.bound, "gamma_count");
  if (n < 1) throw std::invalid_argument("gamma_count needs n >= 1");
  const std::size_t top = static_cast<std::size_t>((n - 1) / 2);
  // Slot top+1 collects everything with a double descent.
  const Counts c = histogram(n, opts, top + 2, [top](const PermWord& pi) {
    const StatRecord r = perm_stats(pi);
    return r.ddes == 0 ? static_cast<std::size_t>(r.pk) : top + 1;
  });
  std::vector<Scalar> out;
  for (std::size_t k = 0; k <= top; ++k) out.emplace_back(Scalar(Integer(std::to_string(c[k]))));
  return out;
}

BiPoly des_exc_polynomial(long n, const EnumOptions& opts) {
  check_bound(n, opts.bound, "des_exc_polynomial");
  const std::size_t width = static_cast<std::size_t>(n) + 1;
  const Counts c = histogram(n, opts, width * width, [width](const PermWord& pi) {
    const StatRecord r = perm_stats(pi);
    return static_cast<std::size_t>(r.exc) * width + static_cast<std::size_t>(r.des);
  });
  std::vector<UniPoly> t_coeffs;
  for (std::size_t j = 0; j < width; ++j) {
    t_coeffs.push_back(from_counts(Counts(c.begin() + static_cast<long>(j * width),
                                          c.begin() + static_cast<long>((j + 1) * width))));
  }
  return BiPoly(std::move(t_coeffs));
}

PermWord mfs_phi(const PermWord& pi, int x) {
  const long n = static_cast<long>(pi.size());
  if (x < 1 || x > n) throw std::invalid_argument("mfs_phi: letter out of range");
  const long inf = n + 1;
  std::vector<long> e(static_cast<std::size_t>(n) + 2, inf);
  long i = 0;
  for (long k = 1; k <= n; ++k) {
    e[static_cast<std::size_t>(k)] = pi[static_cast<std::size_t>(k - 1)];
    if (pi[static_cast<std::size_t>(k - 1)] == x) i = k;
  }
  auto at = [&](long k) { return e[static_cast<std::size_t>(k)]; };
  auto slice = [&](PermWord& out, long from, long to) {
    for (long k = from; k <= to; ++k) out.push_back(static_cast<int>(at(k)));
  };
  PermWord out;
  out.reserve(pi.size());
  if (at(i - 1) > x && x > at(i + 1)) {
    // double descent: hop right past the first j > i with pi(j) < x < pi(j+1)
    long j = i + 1;
    while (!(at(j) < x && x < at(j + 1))) ++j;
    slice(out, 1, i - 1);
    slice(out, i + 1, j);
    out.push_back(x);
    slice(out, j + 1, n);
    return out;
  }
  if (at(i - 1) < x && x < at(i + 1)) {
    // double ascent: hop left to the last j < i with pi(j) > x > pi(j+1)
    long j = i - 1;
    while (!(at(j) > x && x > at(j + 1))) --j;
    slice(out, 1, j);
    out.push_back(x);
    slice(out, j + 1, i - 1);
    slice(out, i + 1, n);
    return out;
  }
  return pi;
}

std::vector<PermWord> mfs_orbit(const PermWord& pi, long bound) {
  check_bound(static_cast<long>(pi.size()), bound, "mfs_orbit");
  validate_perm(pi);
  std::set<PermWord> seen{pi};
  std::vector<PermWord> frontier{pi};
  while (!frontier.empty()) {
    PermWord cur = std::move(frontier.back());
    frontier.pop_back();
    for (int x = 1; x <= static_cast<int>(cur.size()); ++x) {
      PermWord next = mfs_phi(cur, x);
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<PermWord>> mfs_orbits(long n, long bound) {
  check_bound(n, bound, "mfs_orbits");
  if (n > 16) throw BoundExceeded("mfs_orbits: encoding supports n <= 16");
  std::unordered_set<std::uint64_t> visited;
  std::vector<std::vector<PermWord>> out;
  for_each_permutation(n, [&](const PermWord& pi) {
    if (visited.count(encode(pi)) != 0) return;
    auto orbit = mfs_orbit(pi, bound);
    for (const auto& w : orbit) visited.insert(encode(w));
    out.push_back(std::move(orbit));
  });
  return out;
}

void for_each_stirling(long n, const std::function<void(const StirlingWord&)>& visit) {
  if (n < 0) throw std::invalid_argument("for_each_stirling: n must be >= 0");
  StirlingWord w;
  w.reserve(2 * static_cast<std::size_t>(n));
  // Every Stirling word of order k arises once by inserting "kk" into a gap of one of order k-1.
  std::function<void(int)> grow = [&](int k) {
    if (k > n) {
      visit(w);
      return;
    }
    for (std::size_t pos = 0; pos <= w.size(); ++pos) {
      w.insert(w.begin() + static_cast<long>(pos), 2, k);
      grow(k + 1);
      w.erase(w.begin() + static_cast<long>(pos), w.begin() + static_cast<long>(pos) + 2);
    }
  };
  grow(1);
}

std::vector<StirlingWord> stirling_permutations(long n, long bound) {
  check_bound(n, std::min(bound, kStirlingHardBound), "stirling_permutations");
  std::vector<StirlingWord> out;
  for_each_stirling(n, [&](const StirlingWord& w) { out.push_back(w); });
  return out;
}

bool is_stirling(const StirlingWord& w) {
  if (w.size() % 2 != 0) return false;
  const int n = static_cast<int>(w.size() / 2);
  std::vector<int> first(static_cast<std::size_t>(n) + 1, -1);
  std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    const int v = w[i];
    if (v < 1 || v > n) return false;
    const auto vi = static_cast<std::size_t>(v);
    if (++count[vi] == 1) {
      first[vi] = static_cast<int>(i);
    } else if (count[vi] == 2) {
      for (std::size_t j = static_cast<std::size_t>(first[vi]) + 1; j < i; ++j) {
        if (w[j] <= v) return false;
      }
    } else {
      return false;
    }
  }
  return true;
}

StirlingStats stirling_stats(const StirlingWord& w) {
  const std::size_t len = w.size();
  auto at = [&](std::size_t i) { return i == 0 ? 0 : w[i - 1]; };  // 1-based with sigma_0 = 0
  StirlingStats s;
  for (std::size_t i = 1; i + 1 <= len; ++i) {
    if (at(i - 1) < at(i) && at(i) == at(i + 1)) {
      ++s.lap;
      if (i >= 2) ++s.ap;
    }
  }
  s.fap = s.ap + s.lap;
  return s;
}

UniPoly fap_polynomial(long n, long bound) {
  check_bound(n, std::min(bound, kStirlingHardBound), "fap_polynomial");
  Counts c(2 * static_cast<std::size_t>(n) + 1, 0);
  for_each_stirling(n, [&](const StirlingWord& w) { ++c.at(static_cast<std::size_t>(stirling_stats(w).fap)); });
  return from_counts(c);
}

UniPoly motzkin2_ub_poly(long n) {
  check_bound(n, kMotzkinBound, "motzkin2_ub_poly");
  Counts c(static_cast<std::size_t>(n) + 1, 0);
  // Steps: U (up), D (down), B and R (the two level colors); UB counts U and B.
  std::function<void(long, long, long)> walk = [&](long step, long height, long ub) {
    if (step == n) {
      if (height == 0) ++c[static_cast<std::size_t>(ub)];
      return;
    }
    const long left = n - step - 1;
    if (height + 1 <= left) walk(step + 1, height + 1, ub + 1);
    if (height > 0) walk(step + 1, height - 1, ub);
    if (height <= left) {
      walk(step + 1, height, ub + 1);
      walk(step + 1, height, ub);
    }
  };
  walk(0, 0, 0);
  return from_counts(c);
}

UniPoly young2_weight_poly(long n, YoungWeighting weighting) {
  check_bound(n, kYoungBound, "young2_weight_poly");
  // Each row picks its set of black cells; the two rows must have equal size.
  const std::uint32_t full = 1u << n;
  Counts by_k(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint32_t top = 0; top < full; ++top) {
    for (std::uint32_t bottom = 0; bottom < full; ++bottom) {
      const int k = __builtin_popcount(top);
      if (k == __builtin_popcount(bottom)) ++by_k[static_cast<std::size_t>(k)];
    }
  }
  if (weighting == YoungWeighting::sqrt_split) return from_counts(by_k);
  UniPoly out;
  for (std::size_t k = 0; k < by_k.size(); ++k) {
    const long kk = static_cast<long>(k);
    out += UniPoly::monomial(Scalar(Integer(std::to_string(by_k[k]))), 2 * k) *
           linear_power(Scalar(1), Scalar(1), 2 * n - 2 * kk);
  }
  return out;
}

Integer young2_count(long n) {
  check_bound(n, kYoungBound, "young2_count");
  const std::uint32_t full = 1u << n;
  std::uint64_t total = 0;
  for (std::uint32_t top = 0; top < full; ++top) {
    for (std::uint32_t bottom = 0; bottom < full; ++bottom) {
      if (__builtin_popcount(top) == __builtin_popcount(bottom)) ++total;
    }
  }
  return Integer(std::to_string(total));
}

bool contains_pattern(const PermWord& pi, const PermWord& pattern) {
  const std::size_t m = pattern.size();
  if (m == 0) return true;
  if (m > pi.size()) return false;
  std::vector<std::size_t> chosen;
  chosen.reserve(m);
  // Extend the partial embedding one letter at a time, checking relative order as we go.
  std::function<bool(std::size_t)> extend = [&](std::size_t start) -> bool {
    const std::size_t depth = chosen.size();
    if (depth == m) return true;
    for (std::size_t p = start; p + (m - depth) <= pi.size(); ++p) {
      bool ok = true;
      for (std::size_t a = 0; a < depth && ok; ++a) {
        ok = (pi[chosen[a]] < pi[p]) == (pattern[a] < pattern[depth]);
      }
      if (!ok) continue;
      chosen.push_back(p);
      if (extend(p + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return extend(0);
}

UniPoly pattern_class_descent_poly(long n, const std::vector<PermWord>& patterns) {
  check_bound(n, kPatternBound, "pattern_class_descent_poly");
  for (const auto& p : patterns) {
    validate_perm(p);
    if (p.size() > 4) throw std::invalid_argument("pattern_class_descent_poly: patterns have length <= 4");
  }
  Counts c(static_cast<std::size_t>(n) + 1, 0);
  for_each_permutation(n, [&](const PermWord& pi) {
    for (const auto& p : patterns) {
      if (contains_pattern(pi, p)) return;
    }
    ++c[static_cast<std::size_t>(perm_stats(pi).des)];
  });
  return from_counts(c);
}

UniPoly signed_descent_polynomial(long n, long bound) {
  check_bound(n, bound, "signed_descent_polynomial");
  Counts counts(static_cast<std::size_t>(n) + 1, 0);
  for_each_permutation(n, [&](const PermWord& pi) {
    for (unsigned long signs = 0; signs < (1ul << n); ++signs) {
      long prev = 0;
      std::size_t des = 0;
      for (long i = 0; i < n; ++i) {
        const long v = (signs >> i) & 1ul ? -pi[static_cast<std::size_t>(i)] : pi[static_cast<std::size_t>(i)];
        if (prev > v) ++des;
        prev = v;
      }
      ++counts[des];
    }
  });
  return from_counts(counts);
}

PermWord parse_perm(std::string_view text) {
  PermWord out;
  const bool separated = text.find_first_of(", ") != std::string_view::npos;
  if (!separated) {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw ParseError("bad permutation letter in '" + std::string(text) + "'");
      out.push_back(ch - '0');
    }
    return out;
  }
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    for (char ch : token) {
      if (ch < '0' || ch > '9') throw ParseError("bad permutation letter '" + token + "'");
    }
    out.push_back(std::stoi(token));
    token.clear();
  };
  for (char ch : text) {
    if (ch == ',' || ch == ' ') {
      flush();
    } else {
      token += ch;
    }
  }
  flush();
  return out;
}

std::string perm_to_string(const PermWord& pi) {
  std::string out;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(pi[i]);
  }
  return out;
}

}  // namespace gammalab
