#pragma once

#include <optional>
#include <utility>

#include "fftower/tower_field.hpp"

namespace fftower {
namespace residues {

// Euler criterion at the given level (defaults to a's own level): a is a
// p-th power in the multiplicative group of that level's field.  Requires
// a != 0 and p | (field size - 1).  The level matters: a value demoted into
// a subfield can be a p-th power at one level and not at another.
bool is_nth_residue(const TowerField& tf, const Element& a, uint64_t p, int level = -1);

// Roots of y^2 + c y + d over a characteristic-2 tower level (c != 0).
// Returns both roots, or nothing when the absolute trace of d/c^2 is 1.
std::optional<std::pair<Element, Element>> solve_quadratic_char2(const TowerField& tf,
                                                                 const Element& c,
                                                                 const Element& d,
                                                                 int level = -1);

// Solves u^2 + u = w at the given level; root exists iff the absolute trace
// of w vanishes.  The second root is the returned one plus 1.
std::optional<Element> solve_artin_schreier(const TowerField& tf, const Element& w, int level);

// Whether the quadratic resolvent y^2 + x^{2^e} y + (x^{2^{e+1}} + 1) of the
// step polynomial splits over x's level.  Requires x != 0.
bool resolvent_reducible(const TowerField& tf, const Element& x, unsigned e, int level = -1);

// A cube root of a, when a is a cube at the given level.  a != 0.
std::optional<Element> cube_root(const TowerField& tf, const Element& a, int level = -1);

// A root of y^3 + y = t over t's level in characteristic 2, via the
// substitution y = u + 1/u with u^3 a root of z^2 + t z + 1.  Returns
// nothing when the cubic has no root at that level (the roots then lie in a
// higher extension).  Requires t != 0.
std::optional<Element> cardano_cubic_char2(const TowerField& tf, const Element& t, int level = -1);

}  // namespace residues
}  // namespace fftower
