#include "fftower/bigint.hpp"

#include <cmath>
#include <stdexcept>

namespace fftower {

double log2_value(const Bigint& n) {
  if (n <= 0) throw std::invalid_argument("log2_value: argument must be positive");
  long exp = 0;
  double d = mpz_get_d_2exp(&exp, n.get_mpz_t());  // n = d * 2^exp, d in [0.5, 1)
  return static_cast<double>(exp) + std::log2(d);
}

std::string log2_one_decimal(const Bigint& n) {
  double v = log2_value(n) * 10.0;
  long scaled = static_cast<long>(std::floor(v + 0.5));
  std::string s = std::to_string(scaled / 10);
  s += '.';
  s += static_cast<char>('0' + scaled % 10);
  return s;
}

unsigned long valuation(Bigint n, const Bigint& p) {
  if (n == 0) throw std::invalid_argument("valuation: n must be nonzero");
  if (p < 2) throw std::invalid_argument("valuation: p must be at least 2");
  unsigned long k = 0;
  Bigint q, r;
  for (;;) {
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    if (r != 0) break;
    n = q;
    ++k;
  }
  return k;
}

}  // namespace fftower
