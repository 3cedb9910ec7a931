#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "fftower/factor.hpp"
#include "fftower/tower_field.hpp"

namespace fftower {
namespace orders {

// Multiplicative group order of level n written as its algebraic chain:
//   odd q:  q^{2^n}-1  = (q-1) * (q+1) * prod_{j=1}^{n-1} (q^{2^j}+1)
//   q = 2:  4^{3^n}-1  = 3 * prod_{j=0}^{n-1} (4^{2*3^j} + 4^{3^j} + 1)
std::vector<Bigint> group_order_chain(uint64_t q, int n);

// Factors group orders chain piece by chain piece, caching each piece by
// (q, chain index) so repeated levels and repeated towers share work.  The
// characteristic-2 pieces are pre-split as
//   4^{2m}+4^m+1 = (2^{2m}+2^m+1) * (2^{2m}-2^m+1)
// before any general-purpose factoring runs.
class GroupOrderFactory {
 public:
  explicit GroupOrderFactory(FactorOptions opts = FactorOptions(), FactorHints hints = FactorHints());

  FactoredInteger factor_group_order(uint64_t q, int n);
  const FactorOptions& options() const { return opts_; }

 private:
  FactoredInteger piece(uint64_t q, int idx);

  FactorOptions opts_;
  FactorHints hints_;
  std::map<std::pair<uint64_t, int>, FactoredInteger> cache_;
};

struct OrderResult {
  enum class Kind { exact, divisor };
  Kind kind = Kind::exact;
  // The exact multiplicative order, or (divisor case) the part of the order
  // supported on the fully factored primes; that part divides the true
  // order and is certified.
  Bigint order = 1;
  double log2_order = 0.0;
};

// Order of a in the multiplicative group of its level, by descent over the
// factored part of the group order.  group.value must equal the group order
// of a's level.  When group has a composite cofactor that a does not
// vanish on, the result is marked divisor.
OrderResult multiplicative_order(const TowerField& tf, const Element& a,
                                 const FactoredInteger& group);

// The certified lower bound for ord(x_n) implied by the chain construction:
//   odd q:  2^{ (n^2+3n)/2 + v_2(q-1) - 2 }
//   q = 2:  3^{ (n^2+3n)/2 - 1 }
Bigint order_lower_bound(uint64_t q, int n);

// Checks the coprimality/size claims behind the order estimate for the
// sums S_t = 1 + a^{l^t} + ... + a^{(l-1) l^t} with 0 <= b < c:
//   l | S_b and l | S_c,
//   every prime p != l dividing S_b satisfies p > l^{b+1},
//   gcd(S_b, S_c) = l.
struct ChainCoprimalityReport {
  bool sums_divisible = false;
  bool prime_bound_ok = false;
  bool gcd_is_ell = false;
  FactoredInteger sb;
  Bigint gcd = 0;
  bool ok() const { return sums_divisible && prime_bound_ok && gcd_is_ell; }
};
ChainCoprimalityReport verify_chain_coprimality(uint64_t a, uint64_t ell, unsigned b, unsigned c,
                                                const FactorOptions& opts = FactorOptions(),
                                                const FactorHints* hints = nullptr);

// v_2((q^{2^n}-1)/2) computed directly, next to the closed form
// n + v_2(q-1) - 1.  The two agree exactly when q = 1 mod 4; the closed
// form is only ever used as a lower bound.
struct ValuationCheck {
  unsigned long exact = 0;
  unsigned long closed_form = 0;
  bool agree = false;
};
ValuationCheck two_adic_valuation_check(uint64_t q, int n);

}  // namespace orders
}  // namespace fftower
