#pragma once

#include <cstdint>
#include <map>

#include "fftower/bigint.hpp"
#include "fftower/errors.hpp"

namespace fftower {

// value = cofactor * prod p^e.  factors maps primes to exponents; cofactor
// is 1 when the factorization is complete, otherwise a composite remainder
// left over when the budget ran out.
struct FactoredInteger {
  Bigint value = 1;
  std::map<Bigint, unsigned> factors;
  Bigint cofactor = 1;

  bool complete() const { return cofactor == 1; }
  void mul_prime(const Bigint& p, unsigned e) { factors[p] += e; }
  // Adds the factor/cofactor content of a part whose value is already
  // accounted for in value.
  void absorb(const FactoredInteger& part);
  // Multiplies two factored integers, value included.
  void merge(const FactoredInteger& other);
  Bigint reconstruct() const;
  bool consistent() const { return reconstruct() == value; }
};

// Externally supplied factorizations keyed by value; consulted for the full
// input and for intermediate composites.
using FactorHints = std::map<Bigint, FactoredInteger>;

struct FactorOptions {
  // Wall-clock budget per factor_integer call, in seconds; <= 0 disables the
  // deadline.
  double budget_seconds = 300.0;
  unsigned long trial_division_bound = 1000000;
  unsigned long pminus1_b1 = 100000;
  // Brent iterations per polynomial parameter before switching.
  unsigned long rho_iterations = 1ul << 26;
};

// Reads FFTOWER_FACTOR_BUDGET (seconds) if set, else the fallback.
double factor_budget_from_env(double fallback = 300.0);

// Trial division below the configured bound, then Brent's cycle-finding
// variant of Pollard rho with batched gcds, then one-stage Pollard p-1.
// Exhausting the budget is not an error: the unfinished composite part is
// returned in cofactor.
FactoredInteger factor_integer(const Bigint& n, const FactorHints* hints = nullptr,
                               const FactorOptions& opts = FactorOptions());

}  // namespace fftower
