#include "fftower/tower.hpp"

#include <stdexcept>
#include <utility>

#include "fftower/residues.hpp"

namespace fftower {

namespace {

std::vector<uint64_t> polymul_mod(const PrimeField& F, const std::vector<uint64_t>& a,
                                  const std::vector<uint64_t>& b) {
  std::vector<uint64_t> out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  return out;
}

uint64_t gf2_bits(const std::vector<int>& coeffs) {
  uint64_t v = 0;
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] & 1) v |= 1ull << i;
  return v;
}

int gf2_degree(uint64_t a) { return a == 0 ? -1 : 63 - __builtin_clzll(a); }

uint64_t gf2_mod(uint64_t a, uint64_t m) {
  int dm = gf2_degree(m);
  while (gf2_degree(a) >= dm) a ^= m << (gf2_degree(a) - dm);
  return a;
}

// Exhaustive divisor check for a degree-6 polynomial over GF(2): reducible
// polynomials of degree 6 always carry an irreducible factor of degree <= 3.
bool gf2_irreducible_deg6(uint64_t h) {
  if (gf2_degree(h) != 6) return false;
  if ((h & 1) == 0) return false;                      // root at 0
  if (__builtin_popcountll(h) % 2 == 0) return false;  // root at 1
  for (uint64_t f : {0b111ull, 0b1011ull, 0b1101ull})
    if (gf2_mod(h, f) == 0) return false;
  return true;
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::f1: return "f1";
    case Family::f2: return "f2";
    case Family::f3: return "f3";
    case Family::f4: return "f4";
    case Family::f5: return "f5";
    case Family::f6: return "f6";
    case Family::f7: return "f7";
    case Family::custom: return "custom";
  }
  return "?";
}

std::optional<Family> family_from_name(std::string_view s) {
  for (Family f : {Family::f1, Family::f2, Family::f3, Family::f4, Family::f5, Family::f6,
                   Family::f7, Family::custom})
    if (s == family_name(f)) return f;
  return std::nullopt;
}

TowerSpec TowerSpec::make(uint64_t q, Family f) {
  TowerSpec s;
  s.q = q;
  s.family = f;
  if (f == Family::f6 || f == Family::f7) {
    s.e = f == Family::f6 ? 0 : 1;
    s.v_coeffs.assign(static_cast<size_t>(1ull << s.e) + 1, 0);
    s.v_coeffs.back() = 1;
    s.h_coeffs = {1, 0, 1, 1, 0, 1, 1};  // x^6 + x^5 + x^3 + x^2 + 1
    return s;
  }
  if (f == Family::custom) return s;

  PrimeField F(q);
  uint64_t eps = F.inv(F.reduce(4));
  auto r = [&](long long v) { return F.reduce_int(v); };
  DeltaRecurrence g;
  switch (f) {
    case Family::f1:
      s.v_coeffs = {0, eps};
      g.a_coeffs = {r(-1)};
      g.b_coeffs = {eps, F.neg(eps)};
      break;
    case Family::f2: {
      // 4x (x + 3 eps)^2
      std::vector<uint64_t> lin{F.mul(3 % q, eps), 1};
      s.v_coeffs = polymul_mod(F, {0, r(4)}, polymul_mod(F, lin, lin));
      g.a_coeffs = {r(-1)};
      g.b_coeffs = {eps, F.mul(r(-9), eps), r(6), r(-4)};
      break;
    }
    case Family::f3:
      s.v_coeffs = {0, F.mul(2 % q, eps)};
      g.a_coeffs = {};
      g.b_coeffs = {0, r(-1)};
      break;
    case Family::f4: {
      // 8x (2x + 3 eps)^2
      std::vector<uint64_t> lin{F.mul(3 % q, eps), r(2)};
      s.v_coeffs = polymul_mod(F, {0, r(8)}, polymul_mod(F, lin, lin));
      g.a_coeffs = {0, r(48)};
      g.b_coeffs = {0, r(-81), r(288), r(-256)};
      break;
    }
    case Family::f5: {
      // 8x (x + 3 eps)^2
      std::vector<uint64_t> lin{F.mul(3 % q, eps), 1};
      s.v_coeffs = polymul_mod(F, {0, r(8)}, polymul_mod(F, lin, lin));
      g.a_coeffs = {};
      g.b_coeffs = {0, r(-9), r(24), r(-16)};
      break;
    }
    default:
      break;
  }
  s.delta_rec = std::move(g);
  return s;
}

TowerSpec TowerSpec::make(uint64_t q, Family f, uint64_t a, uint64_t b) {
  TowerSpec s = make(q, f);
  s.init_a = a % q;
  s.init_b = b % q;
  return s;
}

void TowerSpec::validate() const {
  if (char2()) {
    if (family != Family::f6 && family != Family::f7 && family != Family::custom)
      throw std::invalid_argument("TowerSpec: families f1..f5 need odd q");
    if (e > 16) throw std::invalid_argument("TowerSpec: e out of range");
    if (h_coeffs.size() != 7 || h_coeffs[6] != 1)
      throw std::invalid_argument("TowerSpec: base polynomial must be monic of degree 6");
    for (int c : h_coeffs)
      if (c != 0 && c != 1) throw std::invalid_argument("TowerSpec: base polynomial bits must be 0/1");
    if (v_coeffs.empty()) throw std::invalid_argument("TowerSpec: empty step polynomial");
    return;
  }
  if (q < 3 || q % 2 == 0 || !is_prime_u64(q))
    throw std::invalid_argument("TowerSpec: q must be an odd prime");
  if (family == Family::f6 || family == Family::f7)
    throw std::invalid_argument("TowerSpec: families f6/f7 need q = 2");
  if (v_coeffs.empty() || v_coeffs.back() == 0)
    throw std::invalid_argument("TowerSpec: step polynomial must have a nonzero leading coefficient");
  for (uint64_t c : v_coeffs)
    if (c >= q) throw std::invalid_argument("TowerSpec: step coefficients must be reduced mod q");
  if (init_a >= q || init_b >= q)
    throw std::invalid_argument("TowerSpec: seed coefficients must be reduced mod q");
  if (delta_rec) {
    for (uint64_t c : delta_rec->a_coeffs)
      if (c >= q) throw std::invalid_argument("TowerSpec: recurrence coefficients must be reduced mod q");
    for (uint64_t c : delta_rec->b_coeffs)
      if (c >= q) throw std::invalid_argument("TowerSpec: recurrence coefficients must be reduced mod q");
  }
}

TowerState::TowerState(const TowerSpec& spec) : spec_(spec), tf_(PrimeField(spec.q)) {
  spec_.validate();
  if (spec_.char2()) {
    append_level_char2(true);
    return;
  }
  const PrimeField& F = tf_.prime_field();
  uint64_t disc = F.add(F.mul(spec_.init_a, spec_.init_a), F.mul(F.reduce(4), spec_.init_b));
  if (F.is_square(disc))
    throw CertificationError("seed polynomial y^2 - a y - b is reducible over GF(q)");

  LevelContext ctx;
  ctx.step_degree = 2;
  ctx.reduction = {Element(spec_.init_b), Element(spec_.init_a)};
  tf_.push_level(std::move(ctx));

  LevelRecord rec;
  rec.n = 1;
  rec.x = tf_.generator(1);
  Element d1 = tf_.add(tf_.one(), tf_.mul(tf_.from_scalar(4), eval_v(rec.x)));
  if (d1.is_zero())
    throw CertificationError("degenerate seed: delta_1 = 0 (step polynomial has a repeated factor)");
  rec.x_nonresidue = !residues::is_nth_residue(tf_, rec.x, 2, 1);
  if (!rec.x_nonresidue) throw CertificationError("x_1 is a square in GF(q,2)");
  rec.delta = d1;
  rec.delta_nonsquare = !residues::is_nth_residue(tf_, d1, 2, 1);
  if (!rec.delta_nonsquare) throw CertificationError("delta_1 is a square in GF(q,2)");
  rec.step_irreducible = true;  // certified by the discriminant test above
  records_.push_back(std::move(rec));
}

const LevelRecord& TowerState::record(int n) const {
  if (n < 1 || n > top()) throw std::invalid_argument("TowerState::record: level out of range");
  return records_[static_cast<size_t>(n - 1)];
}

const Element& TowerState::delta(int n) const {
  const LevelRecord& rec = record(n);
  if (!rec.delta) throw std::domain_error("TowerState::delta: no discriminant chain for q = 2");
  return *rec.delta;
}

Element TowerState::eval_v(const Element& at) const {
  Element acc = tf_.zero();
  for (size_t i = spec_.v_coeffs.size(); i-- > 0;)
    acc = tf_.add(tf_.mul(acc, at), tf_.from_scalar(spec_.v_coeffs[i]));
  return acc;
}

void TowerState::extend() {
  if (spec_.char2())
    append_level_char2(false);
  else
    append_level_odd();
}

void TowerState::extend_to(int n) {
  while (top() < n) extend();
}

void TowerState::append_level_odd() {
  const LevelRecord& prev = records_.back();
  // Irreducibility certificate for the step: delta_{n-1} a non-square.
  if (!prev.delta || prev.delta->is_zero() ||
      residues::is_nth_residue(tf_, *prev.delta, 2, prev.n))
    throw CertificationError("cannot extend: delta is a square (or zero) at the top level");

  int n = prev.n + 1;
  LevelContext ctx;
  ctx.step_degree = 2;
  ctx.reduction = {eval_v(prev.x), tf_.from_int(-1)};
  tf_.push_level(std::move(ctx));

  LevelRecord rec;
  rec.n = n;
  rec.x = tf_.generator(n);
  rec.x_nonresidue = !residues::is_nth_residue(tf_, rec.x, 2, n);
  if (!rec.x_nonresidue) throw CertificationError("x_n is a square at the new level");
  Element dn = tf_.add(tf_.one(), tf_.mul(tf_.from_scalar(4), eval_v(rec.x)));
  if (dn.is_zero()) throw CertificationError("degenerate extension: delta_n = 0");
  rec.delta = dn;
  rec.delta_nonsquare = !residues::is_nth_residue(tf_, dn, 2, n);
  if (!rec.delta_nonsquare) throw CertificationError("delta_n is a square at the new level");
  rec.step_irreducible = true;  // certified by the delta nonsquare precondition
  records_.push_back(std::move(rec));
}

void TowerState::append_level_char2(bool initial) {
  if (initial) {
    uint64_t h = gf2_bits(spec_.h_coeffs);
    if (!gf2_irreducible_deg6(h))
      throw CertificationError("base polynomial h is reducible over GF(2)");
    LevelContext ctx;
    ctx.step_degree = 6;
    ctx.reduction.reserve(6);
    for (int i = 0; i < 6; ++i) ctx.reduction.emplace_back(static_cast<uint64_t>(spec_.h_coeffs[static_cast<size_t>(i)]));
    tf_.push_level(std::move(ctx));

    LevelRecord rec;
    rec.n = 1;
    rec.x = tf_.generator(1);
    rec.x_nonresidue = !residues::is_nth_residue(tf_, rec.x, 3, 1);
    if (!rec.x_nonresidue) throw CertificationError("x_1 is a cube in the base level");
    auto roots = residues::solve_quadratic_char2(tf_, rec.x, tf_.one(), 1);
    if (!roots)
      throw CertificationError("auxiliary quadratic z^2 + x_1 z + 1 does not split over the base level");
    rec.step_irreducible = !residues::is_nth_residue(tf_, roots->first, 3, 1) &&
                           !residues::is_nth_residue(tf_, roots->second, 3, 1);
    if (!rec.step_irreducible)
      throw CertificationError("auxiliary quadratic roots are cubes in the base level");
    rec.resolvent_ok = residues::resolvent_reducible(tf_, rec.x, spec_.e, 1);
    if (!rec.resolvent_ok)
      throw CertificationError("resolvent is irreducible at the base level");
    records_.push_back(std::move(rec));
    return;
  }

  const LevelRecord& prev = records_.back();
  int n = prev.n + 1;
  if (!residues::resolvent_reducible(tf_, prev.x, spec_.e, prev.n))
    throw CertificationError("cubic step is not normal: resolvent irreducible at the top level");
  Element t = prev.x;
  for (unsigned i = 0; i < spec_.e; ++i) t = tf_.square(t);
  auto roots = residues::solve_quadratic_char2(tf_, t, tf_.one(), prev.n);
  if (!roots) throw std::logic_error("append_level_char2: resolvent/trace contradiction");
  if (residues::is_nth_residue(tf_, roots->first, 3, prev.n))
    throw CertificationError("cubic step polynomial is reducible: auxiliary root is a cube");

  LevelContext ctx;
  ctx.step_degree = 3;
  ctx.reduction = {t, tf_.one(), tf_.zero()};
  tf_.push_level(std::move(ctx));

  LevelRecord rec;
  rec.n = n;
  rec.x = tf_.generator(n);
  rec.x_nonresidue = !residues::is_nth_residue(tf_, rec.x, 3, n);
  if (!rec.x_nonresidue) throw CertificationError("x_n is a cube at the new level");
  rec.resolvent_ok = true;
  rec.step_irreducible = true;
  records_.push_back(std::move(rec));
}

ConditionResult TowerState::check_condition(int n, Condition c) const {
  if (n < 2 || n > top()) throw std::invalid_argument("check_condition: need 2 <= n <= top");
  ConditionResult res;
  const Element& xp = x(n - 1);
  switch (c) {
    case Condition::C1: {
      if (spec_.char2()) throw std::invalid_argument("check_condition: C1 applies to odd q");
      Element w = tf_.div(tf_.neg(eval_v(xp)), xp);
      res.witness = w;
      res.holds = !w.is_zero() && residues::is_nth_residue(tf_, w, 2, n - 1);
      return res;
    }
    case Condition::C2:
    case Condition::C2prime: {
      if (spec_.char2()) throw std::invalid_argument("check_condition: C2/C2' apply to odd q");
      if (!spec_.delta_rec)
        throw std::invalid_argument("check_condition: no discriminant recurrence configured");
      Element B = tf_.zero();
      const std::vector<uint64_t>& bc = spec_.delta_rec->b_coeffs;
      const Element& dp = delta(n - 1);
      for (size_t i = bc.size(); i-- > 0;) B = tf_.add(tf_.mul(B, dp), tf_.from_scalar(bc[i]));
      Element denom = c == Condition::C2 ? xp : dp;
      Element w = tf_.div(B, denom);
      res.witness = w;
      res.holds = !w.is_zero() && residues::is_nth_residue(tf_, w, 2, n - 1);
      return res;
    }
    case Condition::C3: {
      if (!spec_.char2()) throw std::invalid_argument("check_condition: C3 applies to q = 2");
      Element w = eval_v(xp);
      res.witness = w;
      Element p = xp;
      for (unsigned ee = 0; ee <= 16; ++ee) {
        if (w == p) {
          res.holds = true;
          res.e_found = ee;
          break;
        }
        p = tf_.square(p);
      }
      return res;
    }
  }
  throw std::invalid_argument("check_condition: unknown condition");
}

bool TowerState::discriminant_recurrence_holds(int n) const {
  if (spec_.char2()) throw std::invalid_argument("discriminant recurrence applies to odd q");
  if (!spec_.delta_rec) throw std::invalid_argument("no discriminant recurrence configured");
  if (n < 2 || n > top()) throw std::invalid_argument("discriminant_recurrence_holds: level out of range");
  const Element& u = delta(n - 1);
  const Element& w = delta(n);
  Element A = tf_.zero();
  for (size_t i = spec_.delta_rec->a_coeffs.size(); i-- > 0;)
    A = tf_.add(tf_.mul(A, u), tf_.from_scalar(spec_.delta_rec->a_coeffs[i]));
  Element B = tf_.zero();
  for (size_t i = spec_.delta_rec->b_coeffs.size(); i-- > 0;)
    B = tf_.add(tf_.mul(B, u), tf_.from_scalar(spec_.delta_rec->b_coeffs[i]));
  Element val = tf_.add(tf_.add(tf_.square(w), tf_.mul(A, w)), B);
  return val.is_zero();
}

NormIdentityReport TowerState::norm_identity(int n, int j, int level_cap) const {
  if (n < 2 || n > top()) throw std::invalid_argument("norm_identity: need 2 <= n <= top");
  if (n > level_cap) throw std::invalid_argument("norm_identity: level cap exceeded");
  if (j < 1 || j > n - 1) throw std::invalid_argument("norm_identity: need 1 <= j <= n-1");

  NormIdentityReport rep;
  rep.lhs = tf_.norm(x(n), j);
  if (spec_.char2()) {
    rep.rhs = tf_.pow(x(n - j), bigint_pow(2ul, static_cast<unsigned long>(spec_.e) *
                                                    static_cast<unsigned long>(j)));
    rep.identity_holds = rep.lhs == rep.rhs;
    return rep;
  }
  Element prod = tf_.one();
  for (int k = 1; k <= j; ++k) {
    Element quot = tf_.div(tf_.norm(x(n - k + 1), 1), x(n - k));
    prod = tf_.mul(prod, tf_.norm(quot, j - k));
  }
  rep.rhs = tf_.mul(x(n - j), prod);
  rep.identity_holds = rep.lhs == rep.rhs;
  Element qt = tf_.div(rep.lhs, x(n - j));
  rep.quotient_square = !qt.is_zero() && residues::is_nth_residue(tf_, qt, 2, n - j);
  return rep;
}

TowerSpec find_initial(uint64_t q, Family family) {
  TowerSpec base = TowerSpec::make(q, family);
  if (base.char2()) {
    TowerState probe(base);
    return base;
  }
  if (family == Family::f5 && (q == 3 || q == 5 || q == 7)) {
    // documented seeds for the f5 exceptional small cases
    if (q == 3) {
      base.init_a = 1;
      base.init_b = 1;
    } else if (q == 5) {
      base.init_a = 1;
      base.init_b = 3;
    } else {
      base.init_a = 2;
      base.init_b = 2;
    }
    TowerState probe(base);
    return base;
  }
  PrimeField F(q);
  for (uint64_t a = 0; a < q; ++a) {
    for (uint64_t b = 0; b < q; ++b) {
      uint64_t disc = F.add(F.mul(a, a), F.mul(F.reduce(4), b));
      if (F.is_square(disc)) continue;
      TowerSpec cand = base;
      cand.init_a = a;
      cand.init_b = b;
      try {
        TowerState probe(cand);
        return cand;
      } catch (const CertificationError&) {
        continue;
      }
    }
  }
  throw CertificationError("find_initial: no admissible seed in GF(q)^2");
}

}  // namespace fftower
