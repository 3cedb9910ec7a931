#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fftower/bigint.hpp"
#include "fftower/prime_field.hpp"
#include "fftower/tower.hpp"

namespace fftower {
namespace oracle {

// A small GF(q^m) in a flat polynomial basis, fully independent of the
// tower representation: it finds its own irreducible modulus and does
// schoolbook arithmetic on coefficient vectors.  Intended for exhaustive
// checks, so q^m is capped at 2^14 and m at 6.
class FlatField {
 public:
  using El = std::vector<uint64_t>;

  FlatField(uint64_t q, int m);                         // lexicographically first modulus
  FlatField(uint64_t q, std::vector<uint64_t> minpoly);  // explicit monic modulus, verified

  uint64_t q() const { return F_.q(); }
  int degree() const { return m_; }
  uint64_t count() const { return count_; }  // q^m
  const std::vector<uint64_t>& modulus() const { return minpoly_; }

  El zero() const { return El(static_cast<size_t>(m_), 0); }
  El one() const;
  El gen() const;  // the class of y
  El from_scalar(uint64_t v) const;
  bool is_zero(const El& a) const;

  El add(const El& a, const El& b) const;
  El sub(const El& a, const El& b) const;
  El neg(const El& a) const;
  El mul(const El& a, const El& b) const;
  El inv(const El& a) const;
  El pow(const El& a, const Bigint& e) const;

  El element(uint64_t idx) const;  // mixed-radix enumeration
  uint64_t index(const El& a) const;

 private:
  void check_irreducible() const;

  PrimeField F_;
  int m_;
  uint64_t count_;
  std::vector<uint64_t> minpoly_;  // monic, length m+1
};

// Order by repeated multiplication; the unconditional reference.
Bigint brute_order(const FlatField& F, const FlatField::El& a);

// Exhaustive p-th power census plus the additive-translation orbit
// decomposition (cosets of the prime field), with per-orbit residue counts.
struct ResidueCensus {
  uint64_t pth_powers = 0;  // includes 0
  std::vector<std::vector<uint64_t>> orbits;  // element indices, ascending reps
  std::vector<uint64_t> orbit_counts;         // p-th powers per orbit
};
ResidueCensus residue_census(const FlatField& F, uint64_t p = 2);

struct CheckReport {
  bool ok = true;
  std::vector<std::string> mismatches;
};

// Embeds tower level n into an independently built flat field of the same
// size (locating a root of each step polynomial by scanning) and compares
// arithmetic, residue classes, norms and orders computed both ways.
CheckReport cross_check(const TowerState& ts, int n);

// Same checks on raw tower pieces; lets tests feed deliberately corrupted
// reduction rules and confirm the mismatch reporting fires.
CheckReport cross_check_raw(const TowerField& tf, const TowerSpec& spec,
                            const std::vector<Element>& xs, int n);

}  // namespace oracle
}  // namespace fftower
