#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace fftower {

// One element of a tower field, stored as nested coefficient vectors: a
// level-0 element is a residue modulo q, a level-n element is a vector of
// level-(n-1) coefficients with respect to the power basis of x_n.  Levels
// below an element's nominal level embed by wrapping, and equality treats a
// padded element and its demoted form as the same value.
class Element {
 public:
  Element() : level_(0), scalar_(0) {}
  explicit Element(uint64_t v) : level_(0), scalar_(v) {}
  Element(int level, std::vector<Element> coeffs)
      : level_(level), scalar_(0), coeffs_(std::move(coeffs)) {}

  int level() const { return level_; }
  bool is_scalar() const { return level_ == 0; }

  uint64_t scalar() const { return scalar_; }  // level 0 only
  const std::vector<Element>& coeffs() const { return coeffs_; }
  std::vector<Element>& coeffs() { return coeffs_; }

  bool is_zero() const;

  // The lowest level this value actually lives at, i.e. with top
  // coefficients stripped while they are zero.
  Element canonical() const;

  friend bool operator==(const Element& a, const Element& b);
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

 private:
  int level_;
  uint64_t scalar_;
  std::vector<Element> coeffs_;
};

}  // namespace fftower
