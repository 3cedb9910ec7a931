#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fftower/errors.hpp"
#include "fftower/tower_field.hpp"

namespace fftower {

// Built-in step polynomial families.  f1..f5 are the odd-characteristic
// quadratic steps x_n^2 + x_n = v(x_{n-1}); f6 and f7 are the
// characteristic-2 cubic steps x_n^3 + x_n = x_{n-1}^{2^e} with e = 0, 1.
enum class Family { f1, f2, f3, f4, f5, f6, f7, custom };

const char* family_name(Family f);
std::optional<Family> family_from_name(std::string_view s);

// Recurrence w^2 + A(u) w + B(u) = 0 tying delta_n (w) to delta_{n-1} (u),
// with delta_n = 1 + 4 v(x_n).  Coefficient vectors ascending in u.
struct DeltaRecurrence {
  std::vector<uint64_t> a_coeffs;
  std::vector<uint64_t> b_coeffs;
};

struct TowerSpec {
  uint64_t q = 3;
  Family family = Family::f1;
  unsigned e = 0;                   // Frobenius twist exponent (q = 2 only)
  std::vector<uint64_t> v_coeffs;   // step polynomial, ascending coefficients
  uint64_t init_a = 0;              // odd q: x_1^2 = a x_1 + b
  uint64_t init_b = 0;
  std::vector<int> h_coeffs;        // q = 2: degree-6 base minimal polynomial bits
  std::optional<DeltaRecurrence> delta_rec;

  bool char2() const { return q == 2; }
  // Fills in v, the delta recurrence and (for q = 2) h for a named family;
  // odd seeds still need to be set or searched.
  static TowerSpec make(uint64_t q, Family f);
  static TowerSpec make(uint64_t q, Family f, uint64_t a, uint64_t b);
  void validate() const;
};

enum class Condition { C1, C2, C2prime, C3 };

struct ConditionResult {
  bool holds = false;
  Element witness;     // the tested quotient (C1/C2/C2') or v(x_{n-1}) (C3)
  unsigned e_found = 0;  // C3 only
};

struct NormIdentityReport {
  bool identity_holds = false;
  // Odd q: whether N_{n,j}(x_n) / x_{n-j} is a square at level n-j.
  std::optional<bool> quotient_square;
  Element lhs;
  Element rhs;
};

struct LevelRecord {
  int n = 0;
  Element x;
  std::optional<Element> delta;   // odd q: 1 + 4 v(x_n)
  // Euler certificates at this level: x (and delta) are non-squares for odd
  // q; x is a non-cube for q = 2.
  bool x_nonresidue = false;
  bool delta_nonsquare = false;
  // Certificate that the step polynomial creating this level is irreducible
  // (odd q: discriminant nonsquare; q = 2: the auxiliary quadratic test).
  bool step_irreducible = false;
  // q = 2 only: the cubic resolvent splits at the previous level.
  bool resolvent_ok = false;
};

// A certified tower: every level is appended only after its irreducibility
// certificate checks out, and the generator/discriminant non-residue
// certificates are recorded per level.
class TowerState {
 public:
  explicit TowerState(const TowerSpec& spec);

  const TowerSpec& spec() const { return spec_; }
  const TowerField& field() const { return tf_; }
  int top() const { return static_cast<int>(records_.size()); }
  const LevelRecord& record(int n) const;
  const Element& x(int n) const { return record(n).x; }
  const Element& delta(int n) const;

  void extend();
  void extend_to(int n);

  // v evaluated at an element via Horner.
  Element eval_v(const Element& at) const;

  // n >= 2.  C1/C2/C2' apply to odd q (C2/C2' need a delta recurrence);
  // C3 applies to q = 2.
  ConditionResult check_condition(int n, Condition c) const;

  // Whether g(delta_{n-1}, delta_n) = 0 for the configured recurrence; n >= 2.
  bool discriminant_recurrence_holds(int n) const;

  // Norm factorization check (1 <= j <= n).  Odd q: verifies
  //   N_{n,j}(x_n) = x_{n-j} * prod_{k=1}^{j} N_{n-k,j-k}(N_{n-k+1,1}(x_{n-k+1}) / x_{n-k})
  // and that the cofactor product is a square at level n-j.  q = 2: verifies
  // N_{n,j}(x_n) = x_{n-j}^{2^{e j}}.  Levels above the cap are refused to
  // keep runtimes bounded.
  NormIdentityReport norm_identity(int n, int j, int level_cap = 5) const;

 private:
  void append_level_odd();
  void append_level_char2(bool initial);

  TowerSpec spec_;
  TowerField tf_;
  std::vector<LevelRecord> records_;
};

// Lexicographically smallest seed (a, b) for x_1^2 = a x_1 + b such that the
// seed polynomial is irreducible and x_1 and delta_1 are non-squares in
// GF(q, 2).  Candidates with delta_1 = 0 are skipped.  For f5 and
// q in {3, 5, 7} the documented seeds are returned directly.  For q = 2
// families the fixed base polynomial spec is returned as-is.
TowerSpec find_initial(uint64_t q, Family family);

}  // namespace fftower
