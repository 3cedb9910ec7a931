#include "fftower/orders.hpp"

#include <stdexcept>

#include "fftower/prime_field.hpp"

namespace fftower {
namespace orders {

std::vector<Bigint> group_order_chain(uint64_t q, int n) {
  if (n < 1) throw std::invalid_argument("group_order_chain: n must be at least 1");
  if (!is_prime_u64(q)) throw std::invalid_argument("group_order_chain: q must be prime");
  std::vector<Bigint> chain;
  Bigint qb = bigint_from_u64(q);
  if (q == 2) {
    chain.push_back(3);
    for (int j = 0; j < n; ++j) {
      unsigned long m = 1;
      for (int i = 0; i < j; ++i) m *= 3;
      Bigint t = bigint_pow(4ul, m);
      chain.push_back(t * t + t + 1);
    }
    return chain;
  }
  chain.push_back(qb - 1);
  chain.push_back(qb + 1);
  for (int j = 1; j < n; ++j) chain.push_back(bigint_pow(qb, 1ul << j) + 1);
  return chain;
}

GroupOrderFactory::GroupOrderFactory(FactorOptions opts, FactorHints hints)
    : opts_(opts), hints_(std::move(hints)) {}

FactoredInteger GroupOrderFactory::piece(uint64_t q, int idx) {
  auto key = std::make_pair(q, idx);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;

  FactoredInteger out;
  const FactorHints* h = hints_.empty() ? nullptr : &hints_;
  if (q == 2 && idx >= 1) {
    unsigned long m = 1;
    for (int i = 1; i < idx; ++i) m *= 3;
    Bigint half = bigint_pow(2ul, m);          // 2^m
    Bigint sq = half * half;                   // 2^{2m}
    out = factor_integer(sq + half + 1, h, opts_);
    out.merge(factor_integer(sq - half + 1, h, opts_));
  } else {
    Bigint qb = bigint_from_u64(q);
    Bigint value;
    if (q == 2) {
      value = 3;
    } else if (idx == 0) {
      value = qb - 1;
    } else if (idx == 1) {
      value = qb + 1;
    } else {
      value = bigint_pow(qb, 1ul << (idx - 1)) + 1;
    }
    out = factor_integer(value, h, opts_);
  }
  cache_.emplace(key, out);
  return out;
}

FactoredInteger GroupOrderFactory::factor_group_order(uint64_t q, int n) {
  if (n < 1) throw std::invalid_argument("factor_group_order: n must be at least 1");
  if (!is_prime_u64(q)) throw std::invalid_argument("factor_group_order: q must be prime");
  int pieces = q == 2 ? n + 1 : n + 1;  // chain length: even 1+n, odd 2+(n-1)
  FactoredInteger out;
  for (int idx = 0; idx < pieces; ++idx) out.merge(piece(q, idx));
  return out;
}

OrderResult multiplicative_order(const TowerField& tf, const Element& a,
                                 const FactoredInteger& group) {
  if (a.is_zero()) throw std::domain_error("multiplicative_order: zero element");
  if (!group.consistent())
    throw std::invalid_argument("multiplicative_order: inconsistent factored group order");
  int level = a.level();
  if (group.value != tf.group_order(level))
    throw std::invalid_argument("multiplicative_order: group order does not match the element's level");

  Bigint t = group.value;
  for (const auto& [p, e] : group.factors) {
    (void)e;
    while (mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t())) {
      Bigint cand = t / p;
      if (tf.pow(a, cand) != tf.one()) break;
      t = cand;
    }
  }
  OrderResult res;
  if (group.cofactor == 1) {
    res.kind = OrderResult::Kind::exact;
    res.order = t;
  } else if (tf.pow(a, t / group.cofactor) == tf.one()) {
    res.kind = OrderResult::Kind::exact;
    res.order = t / group.cofactor;
  } else {
    // Per-prime descent pinned the valuation of ord(a) at every factored
    // prime; that part divides ord(a) and is all we can certify.
    res.kind = OrderResult::Kind::divisor;
    res.order = t / group.cofactor;
  }
  res.log2_order = log2_value(res.order);
  return res;
}

Bigint order_lower_bound(uint64_t q, int n) {
  if (n < 1) throw std::invalid_argument("order_lower_bound: n must be at least 1");
  unsigned long tri = (static_cast<unsigned long>(n) * static_cast<unsigned long>(n) +
                       3ul * static_cast<unsigned long>(n)) /
                      2;
  if (q == 2) return bigint_pow(3ul, tri - 1);
  if (q % 2 == 0 || !is_prime_u64(q))
    throw std::invalid_argument("order_lower_bound: q must be 2 or an odd prime");
  unsigned long v2 = valuation(bigint_from_u64(q - 1), 2);
  return bigint_pow(2ul, tri + v2 - 2);
}

ChainCoprimalityReport verify_chain_coprimality(uint64_t a, uint64_t ell, unsigned b, unsigned c,
                                                const FactorOptions& opts,
                                                const FactorHints* hints) {
  if (a < 2) throw std::invalid_argument("verify_chain_coprimality: a must be at least 2");
  if (!is_prime_u64(ell)) throw std::invalid_argument("verify_chain_coprimality: ell must be prime");
  if (b >= c) throw std::invalid_argument("verify_chain_coprimality: need b < c");

  Bigint ab = bigint_from_u64(a);
  Bigint ellb = bigint_from_u64(ell);
  auto sum = [&](unsigned t) {
    Bigint lt = bigint_pow(ellb, t);
    Bigint base;
    mpz_pow_ui(base.get_mpz_t(), ab.get_mpz_t(), mpz_get_ui(lt.get_mpz_t()));  // a^{l^t}
    Bigint s = 1, term = 1;
    for (uint64_t i = 1; i < ell; ++i) {
      term *= base;
      s += term;
    }
    return s;
  };
  Bigint sb = sum(b), sc = sum(c);

  ChainCoprimalityReport rep;
  rep.sums_divisible = mpz_divisible_p(sb.get_mpz_t(), ellb.get_mpz_t()) &&
                       mpz_divisible_p(sc.get_mpz_t(), ellb.get_mpz_t());
  rep.sb = factor_integer(sb, hints, opts);
  if (!rep.sb.complete())
    throw FactorBudgetError("verify_chain_coprimality: S_b not fully factored within budget");
  Bigint bound = bigint_pow(ellb, b + 1);
  rep.prime_bound_ok = true;
  for (const auto& [p, e] : rep.sb.factors) {
    (void)e;
    if (p != ellb && p <= bound) rep.prime_bound_ok = false;
  }
  mpz_gcd(rep.gcd.get_mpz_t(), sb.get_mpz_t(), sc.get_mpz_t());
  rep.gcd_is_ell = rep.gcd == ellb;
  return rep;
}

ValuationCheck two_adic_valuation_check(uint64_t q, int n) {
  if (n < 1) throw std::invalid_argument("two_adic_valuation_check: n must be at least 1");
  if (q < 3 || q % 2 == 0 || !is_prime_u64(q))
    throw std::invalid_argument("two_adic_valuation_check: q must be an odd prime");
  Bigint N = bigint_pow(bigint_from_u64(q), 1ul << n) - 1;
  ValuationCheck chk;
  chk.exact = valuation(N / 2, 2);
  chk.closed_form = static_cast<unsigned long>(n) + valuation(bigint_from_u64(q - 1), 2) - 1;
  chk.agree = chk.exact == chk.closed_form;
  return chk;
}

}  // namespace orders
}  // namespace fftower
