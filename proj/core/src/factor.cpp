#include "fftower/factor.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "fftower/prime_field.hpp"

namespace fftower {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  bool enabled = false;
  Clock::time_point at;
  bool expired() const { return enabled && Clock::now() >= at; }
  static Deadline in(double seconds) {
    Deadline d;
    if (seconds > 0) {
      d.enabled = true;
      d.at = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(seconds));
    }
    return d;
  }
};

const std::vector<uint32_t>& small_primes(unsigned long bound) {
  static const std::vector<uint32_t> primes = [] {
    const unsigned long limit = 1000000;
    std::vector<bool> comp(limit + 1, false);
    std::vector<uint32_t> out;
    for (unsigned long i = 2; i <= limit; ++i) {
      if (comp[i]) continue;
      out.push_back(static_cast<uint32_t>(i));
      for (unsigned long j = i * i; j <= limit; j += i) comp[j] = true;
    }
    return out;
  }();
  (void)bound;
  return primes;
}

Bigint fsub_abs(const Bigint& a, const Bigint& b) { return a >= b ? a - b : b - a; }

// Brent's variant with batched gcds.  Returns a nontrivial factor of n, or
// 0 when this parameter choice failed or the deadline passed.
Bigint brent_rho(const Bigint& n, unsigned long c, unsigned long max_iters, const Deadline& dl) {
  if (n % 2 == 0) return 2;
  Bigint y = 2, q = 1, g = 1, x, ys, t;
  unsigned long r = 1;
  const unsigned long batch = 128;
  unsigned long iters = 0;
  auto step = [&](Bigint& v) {
    v = (v * v + c) % n;
  };
  while (g == 1 && iters < max_iters) {
    x = y;
    for (unsigned long i = 0; i < r; ++i) step(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      unsigned long lim = std::min(batch, r - k);
      for (unsigned long i = 0; i < lim; ++i) {
        step(y);
        q = q * fsub_abs(x, y) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += batch;
      iters += lim;
      if (dl.expired()) return 0;
    }
    r *= 2;
  }
  if (g == n) {
    // backtrack one step at a time
    do {
      step(ys);
      mpz_gcd(g.get_mpz_t(), fsub_abs(x, ys).get_mpz_t(), n.get_mpz_t());
    } while (g == 1 && !dl.expired());
  }
  if (g == 1 || g == n) return 0;
  return g;
}

// One-stage Pollard p-1.
Bigint pollard_pm1(const Bigint& n, unsigned long b1, const Deadline& dl) {
  Bigint a = 2, g, e;
  unsigned checked = 0;
  for (uint32_t p : small_primes(b1)) {
    if (p > b1) break;
    unsigned long pe = p;
    while (pe <= b1 / p) pe *= p;
    mpz_powm_ui(a.get_mpz_t(), a.get_mpz_t(), pe, n.get_mpz_t());
    if (++checked % 64 == 0) {
      e = a - 1;
      mpz_gcd(g.get_mpz_t(), e.get_mpz_t(), n.get_mpz_t());
      if (g != 1 && g != n) return g;
      if (g == n) return 0;
      if (dl.expired()) return 0;
    }
  }
  e = a - 1;
  mpz_gcd(g.get_mpz_t(), e.get_mpz_t(), n.get_mpz_t());
  if (g != 1 && g != n) return g;
  return 0;
}

}  // namespace

void FactoredInteger::absorb(const FactoredInteger& part) {
  for (const auto& [p, e] : part.factors) factors[p] += e;
  cofactor *= part.cofactor;
}

void FactoredInteger::merge(const FactoredInteger& other) {
  value *= other.value;
  absorb(other);
}

Bigint FactoredInteger::reconstruct() const {
  Bigint v = cofactor;
  for (const auto& [p, e] : factors) v *= bigint_pow(p, e);
  return v;
}

double factor_budget_from_env(double fallback) {
  const char* s = std::getenv("FFTOWER_FACTOR_BUDGET");
  if (!s || !*s) return fallback;
  char* end = nullptr;
  double v = std::strtod(s, &end);
  if (end == s) return fallback;
  return v;
}

FactoredInteger factor_integer(const Bigint& n, const FactorHints* hints,
                               const FactorOptions& opts) {
  if (n < 1) throw std::invalid_argument("factor_integer: n must be positive");
  FactoredInteger out;
  out.value = n;
  if (n == 1) return out;
  if (hints) {
    auto it = hints->find(n);
    if (it != hints->end()) return it->second;
  }

  Deadline dl = Deadline::in(opts.budget_seconds);
  Bigint m = n;
  for (uint32_t p : small_primes(opts.trial_division_bound)) {
    if (p > opts.trial_division_bound) break;
    Bigint pb = bigint_from_u64(p);
    if (pb * pb > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      out.mul_prime(pb, 1);
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    }
  }

  std::vector<Bigint> work;
  if (m > 1) work.push_back(m);
  while (!work.empty()) {
    Bigint cur = work.back();
    work.pop_back();
    if (cur == 1) continue;

    // strip primes already identified
    bool stripped = false;
    for (const auto& [p, e] : out.factors) {
      (void)e;
      while (mpz_divisible_p(cur.get_mpz_t(), p.get_mpz_t())) {
        out.mul_prime(p, 1);
        mpz_divexact(cur.get_mpz_t(), cur.get_mpz_t(), p.get_mpz_t());
        stripped = true;
      }
    }
    if (stripped && cur > 1) {
      work.push_back(cur);
      continue;
    }
    if (cur == 1) continue;

    if (is_prime(cur)) {
      out.mul_prime(cur, 1);
      continue;
    }
    if (hints) {
      auto it = hints->find(cur);
      if (it != hints->end()) {
        out.absorb(it->second);
        continue;
      }
    }
    if (mpz_perfect_power_p(cur.get_mpz_t())) {
      for (unsigned long k = 2; k <= bit_length(cur); ++k) {
        Bigint root;
        if (mpz_root(root.get_mpz_t(), cur.get_mpz_t(), k) != 0) {
          for (unsigned long i = 0; i < k; ++i) work.push_back(root);
          break;
        }
      }
      continue;
    }
    if (dl.expired()) {
      out.cofactor *= cur;
      continue;
    }

    Bigint d = 0;
    for (unsigned long c = 1; c < 64 && !dl.expired(); ++c) {
      d = brent_rho(cur, c, opts.rho_iterations, dl);
      if (d != 0) break;
    }
    if (d == 0 && !dl.expired()) d = pollard_pm1(cur, opts.pminus1_b1, dl);
    if (d == 0) {
      out.cofactor *= cur;
      continue;
    }
    work.push_back(d);
    work.push_back(cur / d);
  }
  return out;
}

}  // namespace fftower
