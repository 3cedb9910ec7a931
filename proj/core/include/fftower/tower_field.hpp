#pragma once

#include <cstdint>
#include <vector>

#include "fftower/bigint.hpp"
#include "fftower/element.hpp"
#include "fftower/prime_field.hpp"

namespace fftower {

// One extension step.  Level n is generated over level n-1 by x_n with
// monic minimal polynomial x^d = reduction[d-1] x^{d-1} + ... + reduction[0],
// where the reduction coefficients live at level n-1.
struct LevelContext {
  int step_degree = 0;
  std::vector<Element> reduction;
};

// A stack of extension steps over a prime field, with all ring and group
// operations on nested-coefficient elements.  The structure is immutable
// once built except for push_level, so const methods are safe to call
// concurrently.
class TowerField {
 public:
  explicit TowerField(PrimeField base) : fq_(base) {}

  const PrimeField& prime_field() const { return fq_; }
  uint64_t q() const { return fq_.q(); }
  int top_level() const { return static_cast<int>(levels_.size()); }
  const LevelContext& context(int level) const;  // level in [1, top]
  void push_level(LevelContext ctx);

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element from_scalar(uint64_t v) const { return Element(fq_.reduce(v)); }
  Element from_int(long long v) const { return Element(fq_.reduce_int(v)); }
  // x_level as an element (level >= 1).
  Element generator(int level) const;

  int absolute_degree(int level) const;  // product of step degrees
  Bigint field_size(int level) const;    // q^absolute_degree
  Bigint group_order(int level) const { return field_size(level) - 1; }

  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element mul(const Element& a, const Element& b) const;
  Element square(const Element& a) const { return mul(a, a); }
  Element inv(const Element& a) const;  // a != 0
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }
  Element pow(const Element& a, const Bigint& e) const;  // e >= 0
  Element pow_u64(const Element& a, uint64_t e) const;

  bool eq(const Element& a, const Element& b) const { return a == b; }

  Element lift(const Element& a, int level) const;
  // Strips padding down to the requested level; throws if the element does
  // not actually lie in that subfield representation.
  Element demote_to(const Element& a, int level) const;

  // Galois conjugate over the next level down; defined for quadratic steps
  // only (for c0 + c1 x with x^2 = r1 x + r0 this is c0 + c1 r1 - c1 x).
  Element conjugate_top(const Element& a, int level = -1) const;

  // j-fold relative norm from a's level down, landing j levels lower.
  // Quadratic steps use a * conjugate_top(a); other step degrees use the
  // exponent (|K|-1)/(|k|-1).
  Element norm(const Element& a, int j) const;
  // Same map computed purely by exponentiation; cross-check path.
  Element norm_by_pow(const Element& a, int j) const;

  // Absolute trace to GF(2); q must be 2.  Returns 0 or 1.
  int abs_trace_char2(const Element& a, int level = -1) const;

 private:
  Element mul_same_level(const Element& a, const Element& b, int level) const;
  Element scale(const Element& low, const Element& hi) const;  // low.level < hi.level

  PrimeField fq_;
  std::vector<LevelContext> levels_;
};

}  // namespace fftower
