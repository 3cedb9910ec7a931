#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "fftower/residues.hpp"
#include "fftower/tower.hpp"

using namespace fftower;

namespace {

std::vector<Element> all_level1(const TowerField& tf, int degree) {
  // enumerate a degree-d level-1 extension by coefficient digits
  std::vector<Element> out;
  uint64_t q = tf.q();
  uint64_t total = 1;
  for (int i = 0; i < degree; ++i) total *= q;
  for (uint64_t idx = 0; idx < total; ++idx) {
    uint64_t rest = idx;
    std::vector<Element> c;
    for (int i = 0; i < degree; ++i) {
      c.push_back(Element(rest % q));
      rest /= q;
    }
    out.push_back(Element(1, std::move(c)));
  }
  return out;
}

}  // namespace

TEST_CASE("euler criterion matches explicit squares in gf9") {
  TowerState ts(TowerSpec::make(3, Family::f1, 2, 1));
  const TowerField& tf = ts.field();
  auto els = all_level1(tf, 2);
  std::set<size_t> squares;
  for (size_t i = 0; i < els.size(); ++i)
    for (size_t j = 0; j < els.size(); ++j)
      if (tf.mul(els[j], els[j]) == els[i]) squares.insert(i);
  int count = 0;
  for (size_t i = 0; i < els.size(); ++i) {
    if (els[i].is_zero()) {
      CHECK(squares.count(i) == 1);  // zero is a square but outside the group
      continue;
    }
    bool euler = residues::is_nth_residue(tf, els[i], 2, 1);
    CHECK(euler == (squares.count(i) > 0));
    if (euler) ++count;
  }
  CHECK(count == 4);  // (9-1)/2
  CHECK_THROWS(residues::is_nth_residue(tf, tf.zero(), 2, 1));
  CHECK_THROWS(residues::is_nth_residue(tf, tf.one(), 5, 1));  // 5 does not divide 8
}

TEST_CASE("residue class depends on the level") {
  TowerState ts(TowerSpec::make(3, Family::f1, 2, 1));
  ts.extend_to(2);
  const TowerField& tf = ts.field();
  Element x1 = ts.x(1);
  CHECK_FALSE(residues::is_nth_residue(tf, x1, 2, 1));
  // x1 = (x2 conjugates product) becomes a square one level up: N(x2) = -v(x1) = -x1,
  // and -1 is a square in GF(81), so x1 = -N(x2) = (-1) x2^2 ... as squares go
  CHECK(residues::is_nth_residue(tf, x1, 2, 2));
  CHECK(residues::is_nth_residue(tf, tf.square(ts.x(2)), 2, 2));
  CHECK_FALSE(residues::is_nth_residue(tf, ts.x(2), 2, 2));
}

TEST_CASE("quadratic solver in characteristic 2") {
  TowerState ts(TowerSpec::make(2, Family::f6));
  ts.extend_to(2);
  const TowerField& tf = ts.field();
  auto els = all_level1(tf, 6);
  int solvable = 0;
  Element c = tf.add(ts.x(1), tf.one());
  for (const Element& d : els) {
    auto roots = residues::solve_quadratic_char2(tf, c, d, 1);
    Element w = tf.div(d, tf.square(c));
    int tr = tf.abs_trace_char2(w, 1);
    if (roots) {
      ++solvable;
      CHECK(tr == 0);
      for (const Element& y : {roots->first, roots->second})
        CHECK(tf.add(tf.square(y), tf.add(tf.mul(c, y), d)).is_zero());
      CHECK(tf.add(roots->first, roots->second) == c);  // root sum
      CHECK(tf.mul(roots->first, roots->second) == d);  // root product
    } else {
      CHECK(tr == 1);
    }
  }
  CHECK(solvable == 32);  // half of GF(64)
}

TEST_CASE("artin-schreier solver at even and odd absolute degrees") {
  TowerState ts(TowerSpec::make(2, Family::f6));
  ts.extend_to(2);
  const TowerField& tf = ts.field();
  // level 1: degree 6 (even branch), level 2: degree 18 (even branch);
  // the odd branch is exercised through the prime field itself
  for (int level : {1, 2}) {
    std::vector<Element> us{ts.x(level), tf.add(ts.x(level), tf.one()),
                            tf.square(ts.x(level)), tf.mul(ts.x(level), ts.x(1))};
    for (const Element& u : us) {
      Element w = tf.add(tf.square(u), u);
      auto r = residues::solve_artin_schreier(tf, w, level);
      REQUIRE(r.has_value());
      CHECK(tf.add(tf.square(*r), *r) == w);
      CHECK((*r == u || *r == tf.add(u, tf.one())));
    }
    // a trace-one element has no root
    auto none = residues::solve_artin_schreier(tf, ts.x(1), level);
    if (tf.abs_trace_char2(tf.lift(ts.x(1), level), level) == 1)
      CHECK_FALSE(none.has_value());
    else
      CHECK(none.has_value());
  }
}

TEST_CASE("cube roots in gf64") {
  TowerState ts(TowerSpec::make(2, Family::f6));
  const TowerField& tf = ts.field();
  Element x1 = ts.x(1);
  CHECK_FALSE(residues::is_nth_residue(tf, x1, 3, 1));
  CHECK(residues::is_nth_residue(tf, tf.mul(x1, tf.square(x1)), 3, 1));
  auto r = residues::cube_root(tf, tf.pow_u64(x1, 3), 1);
  REQUIRE(r.has_value());
  CHECK(tf.pow_u64(*r, 3) == tf.pow_u64(x1, 3));
  CHECK_FALSE(residues::cube_root(tf, x1, 1).has_value());
}

TEST_CASE("cube roots in odd towers") {
  TowerState ts(TowerSpec::make(7, Family::f1, 1, 4));
  ts.extend_to(2);
  const TowerField& tf = ts.field();
  for (int level : {1, 2}) {
    Element g = tf.add(ts.x(level), tf.one());
    Element cube = tf.pow_u64(g, 3);
    auto r = residues::cube_root(tf, cube, level);
    REQUIRE(r.has_value());
    CHECK(tf.pow_u64(*r, 3) == cube);
  }
}

TEST_CASE("cardano solver agrees with exhaustive search over gf64") {
  TowerState ts(TowerSpec::make(2, Family::f6));
  const TowerField& tf = ts.field();
  auto els = all_level1(tf, 6);
  int with_root = 0, without_root = 0;
  for (const Element& t : els) {
    if (t.is_zero()) continue;
    bool has_root = false;
    for (const Element& y : els)
      if (tf.add(tf.add(tf.mul(y, tf.square(y)), y), t).is_zero()) has_root = true;
    auto r = residues::cardano_cubic_char2(tf, t, 1);
    CHECK(r.has_value() == has_root);
    if (r) {
      ++with_root;
      CHECK(tf.add(tf.mul(*r, tf.square(*r)), *r) == t);
    } else {
      ++without_root;
    }
  }
  CHECK(with_root + without_root == 63);
  CHECK(with_root > 0);
  CHECK(without_root > 0);
}

TEST_CASE("resolvent reducibility matches the certified records") {
  TowerState ts(TowerSpec::make(2, Family::f7));
  ts.extend_to(3);
  const TowerField& tf = ts.field();
  for (int n = 1; n <= 3; ++n) {
    CHECK(ts.record(n).resolvent_ok);
    CHECK(residues::resolvent_reducible(tf, ts.x(n), ts.spec().e, n));
  }
}
