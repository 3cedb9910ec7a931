#include "fftower/residues.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace fftower {
namespace residues {

namespace {

// Generic exact cube root in a cyclic group of known order N, used both for
// tower levels and for the ad-hoc quadratic extension in the trace-1 branch
// of the cubic solver.  G supplies El, one(), mul(), inv(), eq() and a
// deterministic witness candidate sequence.
template <class G>
typename G::El group_pow(const G& g, typename G::El a, const Bigint& e) {
  typename G::El result = g.one();
  size_t bits = bit_length(e);
  if (e == 0) return result;
  for (size_t i = 0; i < bits; ++i) {
    if (bit_test(e, i)) result = g.mul(result, a);
    if (i + 1 < bits) a = g.mul(a, a);
  }
  return result;
}

template <class G>
typename G::El find_noncube(const G& g, const Bigint& n_over_3) {
  for (int k = 0; k < 200; ++k) {
    typename G::El cand = g.candidate(k);
    if (!g.nonzero(cand) || g.eq(cand, g.one())) continue;
    if (!g.eq(group_pow(g, cand, n_over_3), g.one())) return cand;
  }
  throw std::logic_error("find_noncube: no witness found");
}

template <class G>
std::optional<typename G::El> generic_cube_root(const G& g, const typename G::El& a, const Bigint& N) {
  if (N % 3 != 0) {
    Bigint inv3;
    mpz_invert(inv3.get_mpz_t(), Bigint(3).get_mpz_t(), N.get_mpz_t());
    return group_pow(g, a, inv3);
  }
  Bigint n3 = N / 3;
  if (!g.eq(group_pow(g, a, n3), g.one())) return std::nullopt;

  Bigint qq = N;
  unsigned long s = 0;
  while (qq % 3 == 0) {
    qq /= 3;
    ++s;
  }
  // Initial guess y with y^3 / a in the 3-Sylow subgroup.
  Bigint e0;
  if (qq % 3 == 2)
    e0 = (qq + 1) / 3;
  else
    e0 = (2 * qq + 1) / 3;
  typename G::El y = group_pow(g, a, e0);
  typename G::El t = g.mul(group_pow(g, y, Bigint(3)), g.inv(a));

  typename G::El V = group_pow(g, find_noncube(g, n3), qq);
  typename G::El omega = group_pow(g, V, bigint_pow(Bigint(3), s - 1));
  typename G::El omega2 = g.mul(omega, omega);

  while (!g.eq(t, g.one())) {
    unsigned long i = 0;
    typename G::El tmp = t;
    while (!g.eq(tmp, g.one())) {
      tmp = g.mul(g.mul(tmp, tmp), tmp);
      ++i;
    }
    if (i >= s) throw std::logic_error("generic_cube_root: descent failed");
    typename G::El head = group_pow(g, t, bigint_pow(Bigint(3), i - 1));
    unsigned long j;
    if (g.eq(head, omega))
      j = 1;
    else if (g.eq(head, omega2))
      j = 2;
    else
      throw std::logic_error("generic_cube_root: unexpected Sylow element");
    Bigint step = (3 - j) * bigint_pow(Bigint(3), s - i - 1);
    typename G::El d = group_pow(g, V, step);
    y = g.mul(y, d);
    t = g.mul(t, group_pow(g, d, Bigint(3)));
  }
  return y;
}

// Builds the idx-th monomial of the natural GF(q)-basis of the given level
// (mixed-radix decomposition over the step degrees).
Element basis_monomial(const TowerField& tf, int level, int idx) {
  if (level == 0) return tf.one();
  int m_low = tf.absolute_degree(level - 1);
  int pos = idx / m_low;
  int rem = idx % m_low;
  std::vector<Element> c(static_cast<size_t>(tf.context(level).step_degree), Element(0));
  c[static_cast<size_t>(pos)] = basis_monomial(tf, level - 1, rem);
  return Element(level, std::move(c));
}

struct TowerGroup {
  using El = Element;
  const TowerField& tf;
  int level;
  El one() const { return tf.one(); }
  El mul(const El& a, const El& b) const { return tf.mul(a, b); }
  El inv(const El& a) const { return tf.inv(a); }
  bool eq(const El& a, const El& b) const { return a == b; }
  bool nonzero(const El& a) const { return !a.is_zero(); }
  El candidate(int k) const {
    if (level == 0) return tf.from_scalar(static_cast<uint64_t>(k) + 2);
    Element g = tf.generator(level);
    if (k == 0) return g;
    Element p = tf.pow_u64(g, static_cast<uint64_t>(k));
    return k % 2 ? p : tf.add(p, tf.one());
  }
};

// GF(|K|^2) presented as K[z]/(z^2 + t z + 1) for the trace-1 branch of the
// cubic solver; elements are coordinate pairs over K.
struct QuadExtGroup {
  using El = std::array<Element, 2>;
  const TowerField& tf;
  Element t;
  int level;

  El make(Element a0, Element a1) const { return {std::move(a0), std::move(a1)}; }
  El one() const { return make(tf.one(), tf.zero()); }
  El z() const { return make(tf.zero(), tf.one()); }
  El mul(const El& a, const El& b) const {
    Element a1b1 = tf.mul(a[1], b[1]);
    Element c0 = tf.add(tf.mul(a[0], b[0]), a1b1);
    Element c1 = tf.add(tf.add(tf.mul(a[0], b[1]), tf.mul(a[1], b[0])), tf.mul(a1b1, t));
    return make(std::move(c0), std::move(c1));
  }
  El conj(const El& a) const { return make(tf.add(a[0], tf.mul(a[1], t)), a[1]); }
  El inv(const El& a) const {
    El c = conj(a);
    El n = mul(a, c);
    if (!n[1].is_zero()) throw std::logic_error("QuadExtGroup: norm not in base field");
    Element ninv = tf.inv(n[0]);
    return make(tf.mul(c[0], ninv), tf.mul(c[1], ninv));
  }
  bool eq(const El& a, const El& b) const { return a[0] == b[0] && a[1] == b[1]; }
  bool nonzero(const El& a) const { return !a[0].is_zero() || !a[1].is_zero(); }
  El candidate(int k) const {
    Element g = level >= 1 ? tf.generator(level) : tf.one();
    Element p = tf.pow_u64(g, static_cast<uint64_t>(k / 2) + 1);
    if (k % 2 == 0) return make(p, tf.one());
    return make(tf.add(p, tf.one()), p);
  }
};

}  // namespace

bool is_nth_residue(const TowerField& tf, const Element& a, uint64_t p, int level) {
  if (a.is_zero()) throw std::domain_error("is_nth_residue: zero element");
  if (p < 2) throw std::invalid_argument("is_nth_residue: p must be at least 2");
  int L = level < 0 ? a.level() : level;
  Bigint n = tf.group_order(L);
  Bigint pb = bigint_from_u64(p);
  if (n % pb != 0)
    throw std::invalid_argument("is_nth_residue: p does not divide the group order");
  return tf.pow(tf.lift(a, L), n / pb) == tf.one();
}

std::optional<Element> solve_artin_schreier(const TowerField& tf, const Element& w, int level) {
  if (tf.q() != 2) throw std::domain_error("solve_artin_schreier: characteristic must be 2");
  int L = level < 0 ? w.level() : level;
  if (tf.abs_trace_char2(w, L) != 0) return std::nullopt;
  int m = tf.absolute_degree(L);

  if (m % 2 == 1) {
    // half trace
    Element u = tf.zero();
    Element wf = tf.lift(w, L);
    for (int i = 0; i <= (m - 1) / 2; ++i) {
      u = tf.add(u, wf);
      wf = tf.square(tf.square(wf));
    }
    return u;
  }

  Element theta = tf.zero();
  bool found = false;
  for (int idx = 0; idx < m; ++idx) {
    Element cand = basis_monomial(tf, L, idx);
    if (tf.abs_trace_char2(cand, L) == 1) {
      theta = cand;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("solve_artin_schreier: trace form degenerate");

  // u = sum_i theta^{2^i} * (w + w^2 + ... + w^{2^{i-1}}), which satisfies
  // u^2 + u = w * Tr(theta) + theta * Tr(w) = w.
  Element u = tf.zero();
  Element partial = tf.zero();
  Element th = theta;
  Element wf = tf.lift(w, L);
  for (int i = 0; i < m; ++i) {
    u = tf.add(u, tf.mul(th, partial));
    partial = tf.add(partial, wf);
    th = tf.square(th);
    wf = tf.square(wf);
  }
  if (tf.add(tf.square(u), u) != tf.lift(w, L))
    throw std::logic_error("solve_artin_schreier: verification failed");
  return u;
}

std::optional<std::pair<Element, Element>> solve_quadratic_char2(const TowerField& tf,
                                                                 const Element& c,
                                                                 const Element& d,
                                                                 int level) {
  if (tf.q() != 2) throw std::domain_error("solve_quadratic_char2: characteristic must be 2");
  if (c.is_zero()) throw std::invalid_argument("solve_quadratic_char2: degenerate equation (c = 0)");
  int L = level < 0 ? std::max(c.level(), d.level()) : level;
  Element w = tf.div(tf.lift(d, L), tf.square(tf.lift(c, L)));
  std::optional<Element> u = solve_artin_schreier(tf, w, L);
  if (!u) return std::nullopt;
  Element y1 = tf.mul(tf.lift(c, L), *u);
  Element y2 = tf.add(y1, tf.lift(c, L));
  return std::make_pair(std::move(y1), std::move(y2));
}

bool resolvent_reducible(const TowerField& tf, const Element& x, unsigned e, int level) {
  if (tf.q() != 2) throw std::domain_error("resolvent_reducible: characteristic must be 2");
  if (x.is_zero()) throw std::invalid_argument("resolvent_reducible: x must be nonzero");
  int L = level < 0 ? x.level() : level;
  Element c = tf.lift(x, L);
  for (unsigned i = 0; i < e; ++i) c = tf.square(c);
  Element c2 = tf.square(c);
  Element d = tf.add(c2, tf.one());
  Element w = tf.div(d, c2);
  return tf.abs_trace_char2(w, L) == 0;
}

std::optional<Element> cube_root(const TowerField& tf, const Element& a, int level) {
  if (a.is_zero()) throw std::domain_error("cube_root: zero element");
  int L = level < 0 ? a.level() : level;
  TowerGroup g{tf, L};
  return generic_cube_root(g, tf.lift(a, L), tf.group_order(L));
}

std::optional<Element> cardano_cubic_char2(const TowerField& tf, const Element& t, int level) {
  if (tf.q() != 2) throw std::domain_error("cardano_cubic_char2: characteristic must be 2");
  if (t.is_zero()) throw std::invalid_argument("cardano_cubic_char2: t must be nonzero");
  int L = level < 0 ? t.level() : level;
  Element tl = tf.lift(t, L);
  Element w = tf.inv(tf.square(tl));

  if (tf.abs_trace_char2(w, L) == 0) {
    // z^2 + t z + 1 splits over this level; a root of the cubic lies here
    // exactly when z is a cube.
    auto roots = solve_quadratic_char2(tf, tl, tf.one(), L);
    if (!roots) throw std::logic_error("cardano_cubic_char2: resolvent contradiction");
    std::optional<Element> u = cube_root(tf, roots->first, L);
    if (!u) return std::nullopt;
    Element y = tf.add(*u, tf.inv(*u));
    if (tf.add(tf.mul(tf.square(y), y), y) != tl)
      throw std::logic_error("cardano_cubic_char2: root verification failed");
    return y;
  }

  // z lives in the quadratic extension K[z]/(z^2 + t z + 1); the cubic has a
  // (single) root in K exactly when z is a cube up there.
  QuadExtGroup g{tf, tl, L};
  Bigint Q = tf.field_size(L);
  Bigint N2 = Q * Q - 1;
  std::optional<QuadExtGroup::El> u = generic_cube_root(g, g.z(), N2);
  if (!u) return std::nullopt;

  std::optional<Element> omega = solve_artin_schreier(tf, tf.one(), L);
  if (!omega) throw std::logic_error("cardano_cubic_char2: no cube root of unity at even degree");
  std::array<QuadExtGroup::El, 3> cands;
  cands[0] = *u;
  QuadExtGroup::El om = g.make(*omega, tf.zero());
  cands[1] = g.mul(cands[0], om);
  cands[2] = g.mul(cands[1], om);
  for (const auto& cu : cands) {
    QuadExtGroup::El ci = g.inv(cu);
    QuadExtGroup::El sum = g.make(tf.add(cu[0], ci[0]), tf.add(cu[1], ci[1]));
    if (sum[1].is_zero()) {
      Element y = sum[0];
      if (tf.add(tf.mul(tf.square(y), y), y) != tl)
        throw std::logic_error("cardano_cubic_char2: root verification failed");
      return y;
    }
  }
  throw std::logic_error("cardano_cubic_char2: no rational root among cube root candidates");
}

}  // namespace residues
}  // namespace fftower
