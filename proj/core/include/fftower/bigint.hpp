#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace fftower {

using Bigint = mpz_class;

inline Bigint bigint_from_u64(uint64_t v) {
  Bigint r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return r;
}

inline Bigint bigint_pow(const Bigint& base, unsigned long exp) {
  Bigint r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Bigint bigint_pow(unsigned long base, unsigned long exp) {
  Bigint r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

inline size_t bit_length(const Bigint& n) {
  return mpz_sizeinbase(n.get_mpz_t(), 2);
}

inline bool bit_test(const Bigint& n, size_t i) {
  return mpz_tstbit(n.get_mpz_t(), i) != 0;
}

// Natural logarithm base 2 of a positive integer, accurate to ~1e-12 in
// absolute terms for the magnitudes handled here.
double log2_value(const Bigint& n);

// log2(n) rendered with one fractional digit, round half up.
std::string log2_one_decimal(const Bigint& n);

// Largest k with p^k | n.  Requires n != 0 and p >= 2.
unsigned long valuation(Bigint n, const Bigint& p);

}  // namespace fftower
