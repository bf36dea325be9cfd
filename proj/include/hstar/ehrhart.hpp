#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "hstar/polynomial.hpp"
#include "hstar/polytope.hpp"

namespace hstar {

/// i(P,k) = #(kP intersect Z^d); k = 0 returns 1 by the series convention.
/// Throws InputError for k < 0.
Int count_points(const LatticePolytope& p, long k);

/**
 * Ehrhart data of one polytope, with the dilation counts cached. Counting
 * dominates runtime, so keep one calculator per polytope when several
 * quantities are needed. Counts for distinct k are independent.
 */
class EhrhartCalculator {
 public:
  explicit EhrhartCalculator(LatticePolytope p);

  const LatticePolytope& polytope() const { return p_; }

  Int count(long k);

  /**
   * The degree-d polynomial with i(P,k) values at all nonnegative k,
   * interpolated exactly through k = 0..d. With use_reciprocity (valid
   * only for polytopes verified reflexive), counts k = 0..ceil(d/2) are
   * combined with i(P,-k) = (-1)^d i(P,k-1); the result is then
   * cross-checked against a direct count at one extra dilation.
   */
  RatPolynomial ehrhart_polynomial(bool use_reciprocity = false);

  /// Coefficients delta_0..delta_d (trailing zeros retained). Each
  /// delta_j is checked to be a nonnegative integer; a violation throws
  /// InvariantViolation, it is never returned silently.
  std::vector<Int> delta_vector(bool use_reciprocity = false);

  std::map<long, Int> counts() const;

 private:
  LatticePolytope p_;
  mutable std::mutex mutex_;  // counts for distinct k may be requested concurrently
  std::map<long, Int> counts_;
};

RatPolynomial ehrhart_polynomial(const LatticePolytope& p);

/// delta(P, z) as a polynomial (trailing zeros trimmed).
IntPolynomial delta_polynomial(const LatticePolytope& p);

/// delta_0..delta_d with trailing zeros retained up to index d.
std::vector<Int> delta_vector(const LatticePolytope& p);

struct DeltaCheck {
  bool passed = false;
  bool applicable = true;
  std::string witness;
};

/** Outcome of every delta-coefficient property check, with witnesses. */
struct DeltaReport {
  int dim = 0;
  std::vector<Int> delta;

  DeltaCheck delta0;            // delta_0 = 1
  DeltaCheck delta1_identity;   // delta_1 = i(P,1) - (d+1)
  DeltaCheck deltad_interior;   // delta_d = #interior lattice points
  DeltaCheck nonnegativity;     // delta_i >= 0 for all i
  DeltaCheck hibi_lower_bound;  // delta_1 <= delta_i, 1 <= i <= d-1, when delta_d != 0
  DeltaCheck palindromic;       // delta_i = delta_{d-i} for all i

  bool all_passed() const;
};

/// Evaluates every check; failures are reported, not thrown (the
/// nonnegativity guard inside the delta computation still throws).
DeltaReport validate_delta(const LatticePolytope& p);

}  // namespace hstar
