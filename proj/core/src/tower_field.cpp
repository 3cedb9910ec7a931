#include "fftower/tower_field.hpp"

#include <stdexcept>
#include <utility>

namespace fftower {

namespace {

using Poly = std::vector<Element>;

int pdeg(const Poly& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (!p[i].is_zero()) return i;
  return -1;
}

}  // namespace

const LevelContext& TowerField::context(int level) const {
  if (level < 1 || level > top_level())
    throw std::invalid_argument("TowerField::context: level out of range");
  return levels_[static_cast<size_t>(level - 1)];
}

void TowerField::push_level(LevelContext ctx) {
  if (ctx.step_degree < 2) throw std::invalid_argument("push_level: step degree must be >= 2");
  if (ctx.reduction.size() != static_cast<size_t>(ctx.step_degree))
    throw std::invalid_argument("push_level: reduction rule size mismatch");
  for (const Element& r : ctx.reduction)
    if (r.level() > top_level())
      throw std::invalid_argument("push_level: reduction coefficients above current top level");
  levels_.push_back(std::move(ctx));
}

Element TowerField::generator(int level) const {
  const LevelContext& ctx = context(level);
  std::vector<Element> c(static_cast<size_t>(ctx.step_degree), Element(0));
  c[1] = Element(1);
  return Element(level, std::move(c));
}

int TowerField::absolute_degree(int level) const {
  if (level < 0 || level > top_level())
    throw std::invalid_argument("absolute_degree: level out of range");
  int d = 1;
  for (int l = 1; l <= level; ++l) d *= levels_[static_cast<size_t>(l - 1)].step_degree;
  return d;
}

Bigint TowerField::field_size(int level) const {
  return bigint_pow(bigint_from_u64(fq_.q()), static_cast<unsigned long>(absolute_degree(level)));
}

Element TowerField::add(const Element& a, const Element& b) const {
  if (a.level() == b.level()) {
    if (a.is_scalar()) return Element(fq_.add(a.scalar(), b.scalar()));
    std::vector<Element> c;
    c.reserve(a.coeffs().size());
    for (size_t i = 0; i < a.coeffs().size(); ++i) c.push_back(add(a.coeffs()[i], b.coeffs()[i]));
    return Element(a.level(), std::move(c));
  }
  const Element& hi = a.level() > b.level() ? a : b;
  const Element& lo = a.level() > b.level() ? b : a;
  std::vector<Element> c = hi.coeffs();
  c[0] = add(c[0], lo);
  return Element(hi.level(), std::move(c));
}

Element TowerField::neg(const Element& a) const {
  if (a.is_scalar()) return Element(fq_.neg(a.scalar()));
  std::vector<Element> c;
  c.reserve(a.coeffs().size());
  for (const Element& x : a.coeffs()) c.push_back(neg(x));
  return Element(a.level(), std::move(c));
}

Element TowerField::sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

Element TowerField::scale(const Element& low, const Element& hi) const {
  std::vector<Element> c;
  c.reserve(hi.coeffs().size());
  for (const Element& x : hi.coeffs()) c.push_back(mul(low, x));
  return Element(hi.level(), std::move(c));
}

Element TowerField::mul(const Element& a, const Element& b) const {
  if (a.level() == b.level()) return mul_same_level(a, b, a.level());
  if (a.level() < b.level()) return scale(a, b);
  return scale(b, a);
}

Element TowerField::mul_same_level(const Element& a, const Element& b, int level) const {
  if (level == 0) return Element(fq_.mul(a.scalar(), b.scalar()));
  const LevelContext& ctx = context(level);
  int d = ctx.step_degree;
  if (d == 2) {
    // Karatsuba: three submultiplications per quadratic step.
    const Element& a0 = a.coeffs()[0];
    const Element& a1 = a.coeffs()[1];
    const Element& b0 = b.coeffs()[0];
    const Element& b1 = b.coeffs()[1];
    Element m0 = mul(a0, b0);
    Element m2 = mul(a1, b1);
    Element m1 = sub(mul(add(a0, a1), add(b0, b1)), add(m0, m2));
    std::vector<Element> c(2, Element(0));
    c[0] = add(m0, mul(m2, ctx.reduction[0]));
    c[1] = add(m1, mul(m2, ctx.reduction[1]));
    return Element(level, std::move(c));
  }
  std::vector<Element> prod(static_cast<size_t>(2 * d - 1), Element(0));
  for (int i = 0; i < d; ++i) {
    if (a.coeffs()[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; j < d; ++j)
      prod[static_cast<size_t>(i + j)] = add(prod[static_cast<size_t>(i + j)],
                                             mul(a.coeffs()[static_cast<size_t>(i)],
                                                 b.coeffs()[static_cast<size_t>(j)]));
  }
  for (int k = 2 * d - 2; k >= d; --k) {
    Element head = std::move(prod[static_cast<size_t>(k)]);
    if (head.is_zero()) continue;
    for (int i = 0; i < d; ++i) {
      if (ctx.reduction[static_cast<size_t>(i)].is_zero()) continue;
      prod[static_cast<size_t>(k - d + i)] =
          add(prod[static_cast<size_t>(k - d + i)], mul(head, ctx.reduction[static_cast<size_t>(i)]));
    }
  }
  prod.resize(static_cast<size_t>(d));
  return Element(level, std::move(prod));
}

Element TowerField::inv(const Element& a) const {
  if (a.is_zero()) throw std::domain_error("TowerField::inv: division by zero");
  int level = a.level();
  if (level == 0) return Element(fq_.inv(a.scalar()));
  const LevelContext& ctx = context(level);
  int d = ctx.step_degree;

  // Extended Euclid against the step minimal polynomial, with coefficient
  // arithmetic one level down.
  Poly r0(static_cast<size_t>(d + 1), Element(0));
  for (int i = 0; i < d; ++i) r0[static_cast<size_t>(i)] = neg(ctx.reduction[static_cast<size_t>(i)]);
  r0[static_cast<size_t>(d)] = Element(1);
  Poly r1 = a.coeffs();
  Poly t0{Element(0)}, t1{Element(1)};

  while (pdeg(r1) > 0) {
    int d0 = pdeg(r0), d1 = pdeg(r1);
    if (d0 < d1) {
      std::swap(r0, r1);
      std::swap(t0, t1);
      continue;
    }
    Element c = mul(r0[static_cast<size_t>(d0)], inv(r1[static_cast<size_t>(d1)]));
    int s = d0 - d1;
    for (int i = 0; i <= d1; ++i)
      r0[static_cast<size_t>(i + s)] = sub(r0[static_cast<size_t>(i + s)], mul(c, r1[static_cast<size_t>(i)]));
    if (t1.size() + static_cast<size_t>(s) > t0.size()) t0.resize(t1.size() + static_cast<size_t>(s), Element(0));
    for (size_t i = 0; i < t1.size(); ++i)
      t0[i + static_cast<size_t>(s)] = sub(t0[i + static_cast<size_t>(s)], mul(c, t1[i]));
    if (pdeg(r0) < d1) {
      std::swap(r0, r1);
      std::swap(t0, t1);
    }
  }
  if (pdeg(r1) < 0) throw std::domain_error("TowerField::inv: element not invertible");
  Element unit_inv = inv(r1[0]);
  Poly out(static_cast<size_t>(d), Element(0));
  for (size_t i = 0; i < t1.size() && i < out.size(); ++i) out[i] = mul(t1[i], unit_inv);
  return Element(level, std::move(out));
}

Element TowerField::pow(const Element& a, const Bigint& e) const {
  if (e < 0) return pow(inv(a), Bigint(-e));
  if (e == 0) return one();
  Element result = one();
  Element base = a;
  size_t bits = bit_length(e);
  for (size_t i = 0; i < bits; ++i) {
    if (bit_test(e, i)) result = mul(result, base);
    if (i + 1 < bits) base = mul(base, base);
  }
  return result;
}

Element TowerField::pow_u64(const Element& a, uint64_t e) const {
  return pow(a, bigint_from_u64(e));
}

Element TowerField::lift(const Element& a, int level) const {
  if (a.level() > level) throw std::invalid_argument("TowerField::lift: element already above target level");
  Element cur = a;
  for (int l = a.level() + 1; l <= level; ++l) {
    std::vector<Element> c(static_cast<size_t>(context(l).step_degree), Element(0));
    c[0] = std::move(cur);
    cur = Element(l, std::move(c));
  }
  return cur;
}

Element TowerField::demote_to(const Element& a, int level) const {
  if (a.level() <= level) return lift(a, level);
  Element cur = a;
  while (cur.level() > level) {
    for (size_t i = 1; i < cur.coeffs().size(); ++i)
      if (!cur.coeffs()[i].is_zero())
        throw std::domain_error("TowerField::demote_to: element does not lie in the requested subfield");
    Element head = cur.coeffs()[0];  // copy out before overwriting its owner
    cur = std::move(head);
  }
  return lift(cur, level);
}

Element TowerField::conjugate_top(const Element& a, int level) const {
  int L = level < 0 ? a.level() : level;
  if (L < 1) throw std::domain_error("conjugate_top: needs an extension level");
  const LevelContext& ctx = context(L);
  if (ctx.step_degree != 2)
    throw std::domain_error("conjugate_top: defined for quadratic steps only");
  Element al = lift(a, L);
  const Element& c0 = al.coeffs()[0];
  const Element& c1 = al.coeffs()[1];
  std::vector<Element> c{add(c0, mul(c1, ctx.reduction[1])), neg(c1)};
  return Element(L, std::move(c));
}

Element TowerField::norm(const Element& a, int j) const {
  int n = a.level();
  if (j < 0 || j > n) throw std::invalid_argument("norm: step count out of range");
  Element cur = a;
  for (int s = 0; s < j; ++s) {
    int L = n - s;
    Element x = lift(cur, L);
    Element nx;
    if (context(L).step_degree == 2) {
      nx = mul(x, conjugate_top(x));
    } else {
      Bigint e = (field_size(L) - 1) / (field_size(L - 1) - 1);
      nx = pow(x, e);
    }
    cur = demote_to(nx, L - 1);
  }
  return cur;
}

Element TowerField::norm_by_pow(const Element& a, int j) const {
  int n = a.level();
  if (j < 0 || j > n) throw std::invalid_argument("norm_by_pow: step count out of range");
  Bigint e = 1;
  for (int s = 0; s < j; ++s) {
    int L = n - s;
    e *= (field_size(L) - 1) / (field_size(L - 1) - 1);
  }
  return demote_to(pow(lift(a, n), e), n - j);
}

int TowerField::abs_trace_char2(const Element& a, int level) const {
  if (fq_.q() != 2) throw std::domain_error("abs_trace_char2: characteristic must be 2");
  int L = level < 0 ? a.level() : level;
  int m = absolute_degree(L);
  Element t = lift(a, L);
  Element acc = t;
  for (int i = 1; i < m; ++i) {
    t = mul(t, t);
    acc = add(acc, t);
  }
  return static_cast<int>(demote_to(acc, 0).scalar());
}

}  // namespace fftower
