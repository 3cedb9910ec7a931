#pragma once

#include <stdexcept>
#include <string>

namespace fftower {

// An algebraic certificate failed: reducible seed, square discriminant,
// non-normal step, and the like.  The CLI maps this to exit code 3.
struct CertificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The factorization time budget ran out with a composite cofactor left.
// The CLI maps this to exit code 4 unless partial results were requested.
struct FactorBudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fftower
