#pragma once

#include <cstdint>

#include "fftower/bigint.hpp"

namespace fftower {

// Deterministic Miller-Rabin for word-size integers (fixed base set, valid
// for all n < 2^64).
bool is_prime_u64(uint64_t n);

// Deterministic below 2^64; above that, 40 strong-pseudoprime rounds with
// bases drawn from a PRNG seeded by the value itself, so results are
// reproducible run to run.
bool is_prime(const Bigint& n);

// Arithmetic modulo a word-size prime q.  Residues are canonical in [0, q).
class PrimeField {
 public:
  // q must be prime: checked by trial division for q < 2^32, by
  // strong-pseudoprime rounds above.
  explicit PrimeField(uint64_t q);

  uint64_t q() const { return q_; }

  uint64_t reduce(uint64_t a) const { return a % q_; }
  // Reduces a possibly negative machine integer into [0, q).
  uint64_t reduce_int(long long a) const;

  uint64_t add(uint64_t a, uint64_t b) const;
  uint64_t sub(uint64_t a, uint64_t b) const;
  uint64_t neg(uint64_t a) const { return a == 0 ? 0 : q_ - a; }
  uint64_t mul(uint64_t a, uint64_t b) const;
  uint64_t inv(uint64_t a) const;  // a != 0
  uint64_t div(uint64_t a, uint64_t b) const { return mul(a, inv(b)); }
  uint64_t pow(uint64_t a, uint64_t e) const;

  // Euler criterion; q odd.  0 counts as a square.
  bool is_square(uint64_t a) const;

 private:
  uint64_t q_;
};

}  // namespace fftower
