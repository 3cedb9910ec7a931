#include "fftower/prime_field.hpp"

#include <stdexcept>

namespace fftower {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool strong_probable_prime(uint64_t n, uint64_t a) {
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  uint64_t x = powmod_u64(a % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool trial_division_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  // This base set decides primality for every n < 2^64.
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
    if (!strong_probable_prime(n, a)) return false;
  return true;
}

bool is_prime(const Bigint& n) {
  if (n < 2) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t())) return is_prime_u64(mpz_get_ui(n.get_mpz_t()));

  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul})
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;

  Bigint d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  gmp_randstate_t rng;
  gmp_randinit_mt(rng);
  gmp_randseed(rng, n.get_mpz_t());  // deterministic per input
  Bigint a, x, nm1 = n - 1;
  bool composite = false;
  for (int round = 0; round < 40 && !composite; ++round) {
    mpz_urandomm(a.get_mpz_t(), rng, nm1.get_mpz_t());
    a += 1;  // a in [1, n-1]
    if (a == 1 || a == nm1) continue;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1) continue;
    bool witness = true;
    for (unsigned long i = 1; i < s; ++i) {
      mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
      if (x == nm1) {
        witness = false;
        break;
      }
    }
    if (witness) composite = true;
  }
  gmp_randclear(rng);
  return !composite;
}

PrimeField::PrimeField(uint64_t q) : q_(q) {
  if (q < 2) throw std::invalid_argument("PrimeField: modulus must be at least 2");
  if (q >= (1ull << 62)) throw std::invalid_argument("PrimeField: modulus too large");
  bool ok = q < (1ull << 32) ? trial_division_prime(q) : is_prime_u64(q);
  if (!ok) throw std::invalid_argument("PrimeField: modulus is not prime");
}

uint64_t PrimeField::reduce_int(long long a) const {
  long long m = static_cast<long long>(q_);
  long long r = a % m;
  if (r < 0) r += m;
  return static_cast<uint64_t>(r);
}

uint64_t PrimeField::add(uint64_t a, uint64_t b) const {
  uint64_t s = a + b;
  return s >= q_ ? s - q_ : s;
}

uint64_t PrimeField::sub(uint64_t a, uint64_t b) const {
  return a >= b ? a - b : a + q_ - b;
}

uint64_t PrimeField::mul(uint64_t a, uint64_t b) const {
  return mulmod_u64(a, b, q_);
}

uint64_t PrimeField::inv(uint64_t a) const {
  if (a == 0) throw std::domain_error("PrimeField::inv: division by zero");
  // extended Euclid on (a, q)
  long long t = 0, newt = 1;
  long long r = static_cast<long long>(q_), newr = static_cast<long long>(a);
  while (newr != 0) {
    long long quot = r / newr;
    long long tmp = t - quot * newt;
    t = newt;
    newt = tmp;
    tmp = r - quot * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += static_cast<long long>(q_);
  return static_cast<uint64_t>(t);
}

uint64_t PrimeField::pow(uint64_t a, uint64_t e) const {
  return powmod_u64(a % q_, e, q_);
}

bool PrimeField::is_square(uint64_t a) const {
  if (q_ == 2) return true;
  if (a % q_ == 0) return true;
  return pow(a, (q_ - 1) / 2) == 1;
}

}  // namespace fftower
