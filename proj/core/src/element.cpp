#include "fftower/element.hpp"

namespace fftower {

bool Element::is_zero() const {
  if (level_ == 0) return scalar_ == 0;
  for (const Element& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

Element Element::canonical() const {
  const Element* cur = this;
  while (cur->level_ > 0) {
    bool tail_zero = true;
    for (size_t i = 1; i < cur->coeffs_.size(); ++i)
      if (!cur->coeffs_[i].is_zero()) {
        tail_zero = false;
        break;
      }
    if (!tail_zero) break;
    cur = &cur->coeffs_[0];
  }
  Element out = *cur;
  if (out.level_ > 0)
    for (Element& c : out.coeffs_) c = c.canonical();
  return out;
}

bool operator==(const Element& a, const Element& b) {
  if (a.level_ == b.level_) {
    if (a.level_ == 0) return a.scalar_ == b.scalar_;
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
    return true;
  }
  const Element& hi = a.level_ > b.level_ ? a : b;
  const Element& lo = a.level_ > b.level_ ? b : a;
  for (size_t i = 1; i < hi.coeffs_.size(); ++i)
    if (!hi.coeffs_[i].is_zero()) return false;
  return hi.coeffs_[0] == lo;
}

}  // namespace fftower
