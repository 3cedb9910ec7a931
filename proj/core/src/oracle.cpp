#include "fftower/oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>

#include "fftower/orders.hpp"
#include "fftower/residues.hpp"

namespace fftower {
namespace oracle {

namespace {

int pdeg(const std::vector<uint64_t>& p) {
  for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
    if (p[static_cast<size_t>(i)] != 0) return i;
  return -1;
}

// remainder of num / den over GF(q); den monic-normalized internally
std::vector<uint64_t> poly_rem(const PrimeField& F, std::vector<uint64_t> num,
                               const std::vector<uint64_t>& den) {
  int dd = pdeg(den);
  uint64_t lead_inv = F.inv(den[static_cast<size_t>(dd)]);
  for (int k = pdeg(num); k >= dd; k = pdeg(num)) {
    uint64_t c = F.mul(num[static_cast<size_t>(k)], lead_inv);
    for (int i = 0; i <= dd; ++i)
      num[static_cast<size_t>(k - dd + i)] =
          F.sub(num[static_cast<size_t>(k - dd + i)], F.mul(c, den[static_cast<size_t>(i)]));
  }
  return num;
}

bool poly_irreducible(const PrimeField& F, const std::vector<uint64_t>& p) {
  int d = pdeg(p);
  if (d < 1) return false;
  // any reducible polynomial of degree d has a monic factor of degree <= d/2
  for (int fd = 1; fd <= d / 2; ++fd) {
    uint64_t combos = 1;
    for (int i = 0; i < fd; ++i) combos *= F.q();
    for (uint64_t t = 0; t < combos; ++t) {
      std::vector<uint64_t> div(static_cast<size_t>(fd + 1), 0);
      uint64_t rest = t;
      for (int i = 0; i < fd; ++i) {
        div[static_cast<size_t>(i)] = rest % F.q();
        rest /= F.q();
      }
      div[static_cast<size_t>(fd)] = 1;
      if (pdeg(poly_rem(F, p, div)) < 0) return false;
    }
  }
  return true;
}

}  // namespace

FlatField::FlatField(uint64_t q, int m) : F_(q), m_(m), count_(1) {
  if (m < 1 || m > 6) throw std::invalid_argument("FlatField: degree must be in [1, 6]");
  for (int i = 0; i < m; ++i) {
    count_ *= q;
    if (count_ > 16384) throw std::invalid_argument("FlatField: field too large for exhaustive work");
  }
  uint64_t combos = count_;
  for (uint64_t t = 0; t < combos; ++t) {
    std::vector<uint64_t> cand(static_cast<size_t>(m + 1), 0);
    uint64_t rest = t;
    for (int i = 0; i < m; ++i) {
      cand[static_cast<size_t>(i)] = rest % q;
      rest /= q;
    }
    cand[static_cast<size_t>(m)] = 1;
    if (poly_irreducible(F_, cand)) {
      minpoly_ = std::move(cand);
      return;
    }
  }
  throw std::logic_error("FlatField: no irreducible modulus found");
}

FlatField::FlatField(uint64_t q, std::vector<uint64_t> minpoly)
    : F_(q), m_(pdeg(minpoly)), count_(1), minpoly_(std::move(minpoly)) {
  if (m_ < 1 || m_ > 6) throw std::invalid_argument("FlatField: degree must be in [1, 6]");
  for (int i = 0; i < m_; ++i) {
    count_ *= q;
    if (count_ > 16384) throw std::invalid_argument("FlatField: field too large for exhaustive work");
  }
  if (minpoly_.size() != static_cast<size_t>(m_ + 1) || minpoly_.back() != 1)
    throw std::invalid_argument("FlatField: modulus must be monic");
  for (uint64_t c : minpoly_)
    if (c >= q) throw std::invalid_argument("FlatField: modulus coefficients must be reduced");
  check_irreducible();
}

void FlatField::check_irreducible() const {
  if (!poly_irreducible(F_, minpoly_))
    throw std::invalid_argument("FlatField: modulus is reducible");
}

FlatField::El FlatField::one() const {
  El a = zero();
  a[0] = 1;
  return a;
}

FlatField::El FlatField::gen() const {
  El a = zero();
  if (m_ < 2) throw std::domain_error("FlatField: no generator coordinate in degree 1");
  a[1] = 1;
  return a;
}

FlatField::El FlatField::from_scalar(uint64_t v) const {
  El a = zero();
  a[0] = F_.reduce(v);
  return a;
}

bool FlatField::is_zero(const El& a) const {
  for (uint64_t c : a)
    if (c != 0) return false;
  return true;
}

FlatField::El FlatField::add(const El& a, const El& b) const {
  El c = a;
  for (int i = 0; i < m_; ++i) c[static_cast<size_t>(i)] = F_.add(c[static_cast<size_t>(i)], b[static_cast<size_t>(i)]);
  return c;
}

FlatField::El FlatField::sub(const El& a, const El& b) const {
  El c = a;
  for (int i = 0; i < m_; ++i) c[static_cast<size_t>(i)] = F_.sub(c[static_cast<size_t>(i)], b[static_cast<size_t>(i)]);
  return c;
}

FlatField::El FlatField::neg(const El& a) const {
  El c = a;
  for (uint64_t& v : c) v = F_.neg(v);
  return c;
}

FlatField::El FlatField::mul(const El& a, const El& b) const {
  std::vector<uint64_t> prod(static_cast<size_t>(2 * m_ - 1), 0);
  for (int i = 0; i < m_; ++i)
    for (int j = 0; j < m_; ++j)
      prod[static_cast<size_t>(i + j)] =
          F_.add(prod[static_cast<size_t>(i + j)],
                 F_.mul(a[static_cast<size_t>(i)], b[static_cast<size_t>(j)]));
  for (int k = 2 * m_ - 2; k >= m_; --k) {
    uint64_t c = prod[static_cast<size_t>(k)];
    if (c == 0) continue;
    prod[static_cast<size_t>(k)] = 0;
    for (int i = 0; i < m_; ++i)
      prod[static_cast<size_t>(k - m_ + i)] =
          F_.sub(prod[static_cast<size_t>(k - m_ + i)], F_.mul(c, minpoly_[static_cast<size_t>(i)]));
  }
  prod.resize(static_cast<size_t>(m_));
  return prod;
}

FlatField::El FlatField::inv(const El& a) const {
  if (is_zero(a)) throw std::domain_error("FlatField::inv: division by zero");
  // extended Euclid against the modulus
  std::vector<uint64_t> r0 = minpoly_, r1 = a;
  r1.resize(static_cast<size_t>(m_ + 1), 0);
  std::vector<uint64_t> t0(static_cast<size_t>(m_ + 1), 0), t1(static_cast<size_t>(m_ + 1), 0);
  t1[0] = 1;
  while (pdeg(r1) > 0) {
    int d0 = pdeg(r0), d1 = pdeg(r1);
    if (d0 < d1) {
      std::swap(r0, r1);
      std::swap(t0, t1);
      continue;
    }
    uint64_t c = F_.mul(r0[static_cast<size_t>(d0)], F_.inv(r1[static_cast<size_t>(d1)]));
    int s = d0 - d1;
    for (int i = 0; i <= d1; ++i)
      r0[static_cast<size_t>(i + s)] =
          F_.sub(r0[static_cast<size_t>(i + s)], F_.mul(c, r1[static_cast<size_t>(i)]));
    for (int i = 0; i + s <= m_; ++i)
      t0[static_cast<size_t>(i + s)] =
          F_.sub(t0[static_cast<size_t>(i + s)], F_.mul(c, t1[static_cast<size_t>(i)]));
    if (pdeg(r0) < d1) {
      std::swap(r0, r1);
      std::swap(t0, t1);
    }
  }
  if (pdeg(r1) != 0) throw std::domain_error("FlatField::inv: element not invertible");
  uint64_t u = F_.inv(r1[0]);
  El out(static_cast<size_t>(m_), 0);
  for (int i = 0; i < m_; ++i) out[static_cast<size_t>(i)] = F_.mul(t1[static_cast<size_t>(i)], u);
  return out;
}

FlatField::El FlatField::pow(const El& a, const Bigint& e) const {
  if (e < 0) return pow(inv(a), Bigint(-e));
  El result = one();
  El base = a;
  size_t bits = bit_length(e);
  if (e == 0) return result;
  for (size_t i = 0; i < bits; ++i) {
    if (bit_test(e, i)) result = mul(result, base);
    if (i + 1 < bits) base = mul(base, base);
  }
  return result;
}

FlatField::El FlatField::element(uint64_t idx) const {
  El a = zero();
  for (int i = 0; i < m_; ++i) {
    a[static_cast<size_t>(i)] = idx % q();
    idx /= q();
  }
  return a;
}

uint64_t FlatField::index(const El& a) const {
  uint64_t idx = 0;
  for (int i = m_ - 1; i >= 0; --i) idx = idx * q() + a[static_cast<size_t>(i)];
  return idx;
}

Bigint brute_order(const FlatField& F, const FlatField::El& a) {
  if (F.is_zero(a)) throw std::domain_error("brute_order: zero element");
  FlatField::El t = a;
  Bigint k = 1;
  while (t != F.one()) {
    t = F.mul(t, a);
    ++k;
  }
  return k;
}

ResidueCensus residue_census(const FlatField& F, uint64_t p) {
  if (p < 2) throw std::invalid_argument("residue_census: p must be at least 2");
  ResidueCensus census;
  std::vector<bool> is_power(F.count(), false);
  for (uint64_t i = 0; i < F.count(); ++i) {
    FlatField::El e = F.element(i);
    FlatField::El px = F.pow(e, bigint_from_u64(p));
    is_power[F.index(px)] = true;
  }
  for (bool b : is_power)
    if (b) ++census.pth_powers;

  std::vector<bool> seen(F.count(), false);
  for (uint64_t i = 0; i < F.count(); ++i) {
    if (seen[i]) continue;
    std::vector<uint64_t> orbit;
    uint64_t powers = 0;
    FlatField::El e = F.element(i);
    for (uint64_t s = 0; s < F.q(); ++s) {
      FlatField::El o = F.add(e, F.from_scalar(s));
      uint64_t idx = F.index(o);
      seen[idx] = true;
      orbit.push_back(idx);
      if (is_power[idx]) ++powers;
    }
    std::sort(orbit.begin(), orbit.end());
    census.orbits.push_back(std::move(orbit));
    census.orbit_counts.push_back(powers);
  }
  return census;
}

namespace {

FlatField::El psi(const FlatField& flat, const std::vector<FlatField::El>& roots, const Element& a) {
  if (a.is_scalar()) return flat.from_scalar(a.scalar());
  const FlatField::El& r = roots[static_cast<size_t>(a.level() - 1)];
  FlatField::El acc = flat.zero();
  FlatField::El rpow = flat.one();
  for (size_t i = 0; i < a.coeffs().size(); ++i) {
    acc = flat.add(acc, flat.mul(psi(flat, roots, a.coeffs()[i]), rpow));
    rpow = flat.mul(rpow, r);
  }
  return acc;
}

Element element_from_digits(const TowerField& tf, int level, const std::vector<uint64_t>& digits,
                            size_t offset) {
  if (level == 0) return Element(tf.prime_field().reduce(digits[offset]));
  int low = tf.absolute_degree(level - 1);
  int d = tf.context(level).step_degree;
  std::vector<Element> c;
  c.reserve(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i)
    c.push_back(element_from_digits(tf, level - 1, digits, offset + static_cast<size_t>(i * low)));
  return Element(level, std::move(c));
}

}  // namespace

CheckReport cross_check(const TowerState& ts, int n) {
  if (n < 1 || n > ts.top()) throw std::invalid_argument("cross_check: level out of range");
  std::vector<Element> xs;
  for (int k = 1; k <= n; ++k) xs.push_back(ts.x(k));
  return cross_check_raw(ts.field(), ts.spec(), xs, n);
}

CheckReport cross_check_raw(const TowerField& tf, const TowerSpec& spec,
                            const std::vector<Element>& xs, int n) {
  if (n < 1 || static_cast<size_t>(n) > xs.size())
    throw std::invalid_argument("cross_check_raw: level out of range");
  int D = tf.absolute_degree(n);
  FlatField flat(spec.q, D);

  CheckReport rep;
  auto fail = [&](std::string msg) {
    rep.ok = false;
    rep.mismatches.push_back(std::move(msg));
  };

  // locate images of x_1..x_n by scanning for roots of each step polynomial
  std::vector<FlatField::El> roots;
  for (int k = 1; k <= n; ++k) {
    bool found = false;
    for (uint64_t i = 1; i < flat.count() && !found; ++i) {
      FlatField::El z = flat.element(i);
      if (k == 1 && !spec.char2()) {
        FlatField::El rhs = flat.add(flat.mul(flat.from_scalar(spec.init_a), z),
                                     flat.from_scalar(spec.init_b));
        if (flat.mul(z, z) == rhs) {
          roots.push_back(z);
          found = true;
        }
      } else if (k == 1) {
        FlatField::El acc = flat.zero();
        FlatField::El zp = flat.one();
        for (int j = 0; j <= 6; ++j) {
          if (spec.h_coeffs[static_cast<size_t>(j)])
            acc = flat.add(acc, zp);
          zp = flat.mul(zp, z);
        }
        if (flat.is_zero(acc)) {
          roots.push_back(z);
          found = true;
        }
      } else if (!spec.char2()) {
        FlatField::El v = flat.zero();
        for (size_t j = spec.v_coeffs.size(); j-- > 0;)
          v = flat.add(flat.mul(v, roots.back()), flat.from_scalar(spec.v_coeffs[j]));
        if (flat.mul(z, z) == flat.sub(v, z)) {
          roots.push_back(z);
          found = true;
        }
      } else {
        FlatField::El t = roots.back();
        for (unsigned j = 0; j < spec.e; ++j) t = flat.mul(t, t);
        if (flat.mul(flat.mul(z, z), z) == flat.add(z, t)) {
          roots.push_back(z);
          found = true;
        }
      }
    }
    if (!found) {
      fail("step " + std::to_string(k) + ": no root of the step polynomial in the flat field");
      return rep;
    }
  }

  // ring homomorphism on deterministic samples
  std::mt19937_64 rng(0x5eed);
  std::vector<Element> samples;
  samples.push_back(xs[static_cast<size_t>(n - 1)]);
  samples.push_back(tf.add(xs[static_cast<size_t>(n - 1)], tf.one()));
  for (int s = 0; s < 6; ++s) {
    std::vector<uint64_t> digits(static_cast<size_t>(D));
    for (uint64_t& d : digits) d = rng() % spec.q;
    samples.push_back(element_from_digits(tf, n, digits, 0));
  }
  for (size_t i = 0; i + 1 < samples.size(); ++i) {
    const Element& a = samples[i];
    const Element& b = samples[i + 1];
    FlatField::El fa = psi(flat, roots, tf.lift(a, n));
    FlatField::El fb = psi(flat, roots, tf.lift(b, n));
    if (psi(flat, roots, tf.mul(a, b)) != flat.mul(fa, fb))
      fail("sample " + std::to_string(i) + ": product mismatch between tower and flat field");
    if (psi(flat, roots, tf.add(a, b)) != flat.add(fa, fb))
      fail("sample " + std::to_string(i) + ": sum mismatch between tower and flat field");
    if (!a.is_zero() && psi(flat, roots, tf.inv(a)) != flat.inv(fa))
      fail("sample " + std::to_string(i) + ": inverse mismatch between tower and flat field");
  }

  const Element& xn = xs[static_cast<size_t>(n - 1)];
  FlatField::El fx = psi(flat, roots, tf.lift(xn, n));
  Bigint N = bigint_from_u64(flat.count()) - 1;

  uint64_t p = spec.char2() ? 3 : 2;
  bool tower_residue = residues::is_nth_residue(tf, xn, p, n);
  bool flat_residue = flat.pow(fx, N / bigint_from_u64(p)) == flat.one();
  if (tower_residue != flat_residue)
    fail("x_n residue class disagrees between tower Euler test and flat Euler test");

  // norm down one step, both ways
  int d = tf.context(n).step_degree;
  Bigint sub_size = bigint_pow(bigint_from_u64(spec.q), static_cast<unsigned long>(D / d));
  Bigint rel_exp = (bigint_from_u64(flat.count()) - 1) / (sub_size - 1);
  FlatField::El flat_norm = flat.pow(fx, rel_exp);
  FlatField::El tower_norm = psi(flat, roots, tf.lift(tf.norm(xn, 1), n));
  if (flat_norm != tower_norm) fail("relative norm of x_n disagrees between tower and flat field");

  // exact order, descent vs brute force
  orders::GroupOrderFactory factory;
  FactoredInteger grp = factory.factor_group_order(spec.q, n);
  orders::OrderResult ord = orders::multiplicative_order(tf, xn, grp);
  if (ord.kind != orders::OrderResult::Kind::exact)
    fail("group order of the oracle-sized field did not factor completely");
  else if (ord.order != brute_order(flat, fx))
    fail("order of x_n disagrees between descent and brute force");

  return rep;
}

}  // namespace oracle
}  // namespace fftower
