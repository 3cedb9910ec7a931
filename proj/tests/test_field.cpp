#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "fftower/tower.hpp"
#include "fftower/tower_field.hpp"

using namespace fftower;

namespace {

// GF(9) with z^2 = z + 1, the worked example field
TowerField gf9() {
  TowerField tf((PrimeField(3)));
  tf.push_level({2, {Element(1), Element(1)}});
  return tf;
}

Element gf9_el(uint64_t c0, uint64_t c1) {
  return Element(1, {Element(c0), Element(c1)});
}

std::vector<Element> all_gf9(const TowerField& tf) {
  std::vector<Element> out;
  for (uint64_t c1 = 0; c1 < 3; ++c1)
    for (uint64_t c0 = 0; c0 < 3; ++c0) out.push_back(gf9_el(c0, c1));
  (void)tf;
  return out;
}

}  // namespace

TEST_CASE("gf9 worked examples") {
  TowerField tf = gf9();
  Element z = tf.generator(1);
  CHECK(tf.mul(gf9_el(1, 1), gf9_el(0, 2)) == gf9_el(2, 1));  // (z+1)(2z) = z+2
  CHECK(tf.pow(z, 4) == tf.from_int(2));
  CHECK(tf.pow(z, 8) == tf.one());
  CHECK(tf.mul(z, z) == gf9_el(1, 1));  // z^2 = z + 1
}

TEST_CASE("gf9 ring axioms exhaustively") {
  TowerField tf = gf9();
  auto els = all_gf9(tf);
  for (const Element& a : els)
    for (const Element& b : els) {
      CHECK(tf.add(a, b) == tf.add(b, a));
      CHECK(tf.mul(a, b) == tf.mul(b, a));
      CHECK(tf.sub(tf.add(a, b), b) == a);
      for (const Element& c : els)
        if (a.coeffs()[0].scalar() == 0)  // thin the cubic loop
          CHECK(tf.mul(a, tf.add(b, c)) == tf.add(tf.mul(a, b), tf.mul(a, c)));
    }
  for (const Element& a : els) {
    if (a.is_zero()) continue;
    CHECK(tf.mul(a, tf.inv(a)) == tf.one());
    CHECK(tf.pow(a, 8) == tf.one());  // Lagrange
  }
  CHECK_THROWS(tf.inv(tf.zero()));
}

TEST_CASE("tower levels and representations") {
  TowerState ts(TowerSpec::make(3, Family::f1, 2, 1));
  ts.extend_to(4);
  const TowerField& tf = ts.field();

  CHECK(tf.absolute_degree(0) == 1);
  CHECK(tf.absolute_degree(1) == 2);
  CHECK(tf.absolute_degree(4) == 16);
  CHECK(tf.field_size(2) == 81);
  CHECK(tf.group_order(3) == 6560);

  for (int n = 1; n <= 4; ++n) CHECK(tf.generator(n) == ts.x(n));

  // x_n satisfies its step polynomial
  Element x1 = ts.x(1);
  CHECK(tf.mul(x1, x1) == tf.add(tf.mul(tf.from_int(2), x1), tf.one()));
  for (int n = 2; n <= 4; ++n) {
    Element xn = ts.x(n);
    Element lhs = tf.add(tf.mul(xn, xn), xn);
    CHECK(lhs == ts.eval_v(ts.x(n - 1)));
  }
}

TEST_CASE("mixed level arithmetic and lifting") {
  TowerState ts(TowerSpec::make(3, Family::f1, 2, 1));
  ts.extend_to(3);
  const TowerField& tf = ts.field();
  Element x2 = ts.x(2);

  CHECK(tf.demote_to(tf.lift(x2, 3), 2) == x2);
  CHECK(tf.lift(x2, 3) == x2);  // equality across padding
  CHECK(tf.add(x2, tf.one()) == tf.add(tf.lift(x2, 3), tf.lift(tf.one(), 3)));
  CHECK(tf.mul(x2, tf.from_int(2)) == tf.mul(tf.lift(x2, 3), tf.lift(tf.from_int(2), 3)));
  CHECK_THROWS_AS(tf.demote_to(ts.x(3), 2), std::domain_error);
  CHECK(tf.demote_to(tf.mul(ts.x(3), tf.conjugate_top(ts.x(3))), 2) ==
        tf.neg(ts.eval_v(x2)));
}

TEST_CASE("field algebra at higher levels") {
  TowerState ts(TowerSpec::make(5, Family::f1, 3, 2));
  ts.extend_to(3);
  const TowerField& tf = ts.field();
  std::vector<Element> samples{ts.x(3), tf.add(ts.x(3), tf.one()),
                               tf.add(tf.mul(ts.x(3), ts.x(2)), ts.x(1)),
                               tf.sub(ts.x(2), ts.x(3))};
  for (const Element& a : samples)
    for (const Element& b : samples) {
      // (a+b)^2 = a^2 + 2ab + b^2
      Element lhs = tf.square(tf.add(a, b));
      Element rhs = tf.add(tf.add(tf.square(a), tf.square(b)),
                           tf.mul(tf.from_int(2), tf.mul(a, b)));
      CHECK(lhs == rhs);
      if (!b.is_zero()) CHECK(tf.mul(tf.div(a, b), b) == a);
    }
  for (const Element& a : samples) {
    if (a.is_zero()) continue;
    CHECK(tf.pow(a, tf.group_order(3)) == tf.one());
    CHECK(tf.mul(a, tf.inv(a)) == tf.one());
    CHECK(tf.inv(tf.inv(a)) == a);
  }
  CHECK(tf.pow(tf.zero(), 0) == tf.one());
  CHECK(tf.pow_u64(ts.x(2), 3) == tf.mul(ts.x(2), tf.square(ts.x(2))));
}

TEST_CASE("conjugation and norms") {
  TowerState ts(TowerSpec::make(3, Family::f1, 2, 1));
  ts.extend_to(4);
  const TowerField& tf = ts.field();

  for (int n = 1; n <= 4; ++n) {
    Element a = tf.add(ts.x(n), tf.from_int(2));
    CHECK(tf.conjugate_top(tf.conjugate_top(a)) == a);
    Element b = ts.x(n);
    // conjugation is a ring homomorphism
    CHECK(tf.conjugate_top(tf.mul(a, b)) == tf.mul(tf.conjugate_top(a), tf.conjugate_top(b)));
    CHECK(tf.conjugate_top(tf.add(a, b)) == tf.add(tf.conjugate_top(a), tf.conjugate_top(b)));
    // conjugation is the relative Frobenius
    CHECK(tf.conjugate_top(a) == tf.pow(a, tf.field_size(n - 1)));
    // norm fixes the subfield test
    CHECK(tf.norm(a, 1) == tf.demote_to(tf.mul(a, tf.conjugate_top(a)), n - 1));
  }

  // multiplicativity and agreement with the single-exponent form
  Element a = tf.add(ts.x(3), ts.x(1));
  Element b = tf.sub(ts.x(3), ts.x(2));
  for (int j = 1; j <= 3; ++j) {
    CHECK(tf.norm(tf.mul(a, b), j) == tf.mul(tf.norm(a, j), tf.norm(b, j)));
    CHECK(tf.norm(a, j) == tf.norm_by_pow(a, j));
  }
  CHECK(tf.norm(a, 0) == a);
}

TEST_CASE("char 2 tower basics") {
  TowerState ts(TowerSpec::make(2, Family::f6));
  ts.extend_to(2);
  const TowerField& tf = ts.field();
  CHECK(tf.absolute_degree(1) == 6);
  CHECK(tf.absolute_degree(2) == 18);
  Element x1 = ts.x(1);
  CHECK(tf.pow(x1, 63) == tf.one());
  CHECK(tf.pow(x1, 21) != tf.one());  // noncube
  // base minimal polynomial: x^6 + x^5 + x^3 + x^2 + 1 = 0
  Element acc = tf.zero();
  for (int k : {0, 2, 3, 5, 6}) acc = tf.add(acc, tf.pow_u64(x1, static_cast<uint64_t>(k)));
  CHECK(acc.is_zero());
  // step: x_2^3 + x_2 = x_1
  Element x2 = ts.x(2);
  CHECK(tf.add(tf.mul(x2, tf.square(x2)), x2) == x1);
  // absolute trace of 1 in even degree is 0, and solve needs that
  CHECK(tf.abs_trace_char2(tf.one(), 1) == 0);
  // norm by conjugate chain is unavailable for cubic steps; exponent form works
  CHECK(tf.norm(x2, 1) == x1);
}

TEST_CASE("element equality and canonical forms") {
  Element z0(static_cast<uint64_t>(0));
  CHECK(z0.is_zero());
  Element padded(2, {Element(1, {Element(2), Element(0)}), Element(1, {Element(0), Element(0)})});
  CHECK(padded.canonical().level() == 0);
  CHECK(padded == Element(2));
  CHECK(padded != Element(1));
  CHECK(Element(1, {Element(0), Element(1)}) != Element(1, {Element(1), Element(1)}));
}
