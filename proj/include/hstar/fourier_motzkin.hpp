#pragma once

#include <vector>

#include "hstar/halfspace.hpp"
#include "hstar/linalg.hpp"

namespace hstar {

/** One row of a mixed system: a.x <= b, or a.x < b when strict. */
struct LinearConstraint {
  IntVector a;
  Int b;
  bool strict = false;
};

/// Largest dimension fm_feasible accepts; elimination blows up beyond this.
inline constexpr int kFourierMotzkinMaxDim = 8;

/// Exact feasibility of a mixed strict/non-strict rational system by
/// Fourier-Motzkin elimination. Throws CapabilityError when dim exceeds
/// kFourierMotzkinMaxDim.
bool fm_feasible(const std::vector<LinearConstraint>& constraints, int dim);

/// Spec-facing overload: the i-th halfspace is strict iff strict_mask[i].
bool fm_feasible(const HRep& constraints, const std::vector<bool>& strict_mask);

/**
 * Successive projections of a closed system onto coordinate prefixes.
 * Level k holds constraints mentioning only x_1..x_k, obtained by exact
 * elimination of the trailing variables; level dim is the input system.
 * Used to drive lattice-point enumeration by recursive coordinate fixing.
 */
class ProjectionChain {
 public:
  explicit ProjectionChain(const HRep& h);

  int dim() const { return dim_; }

  /// True when the system has no real solution at all.
  bool empty() const { return empty_; }

  /// Bounding constraints whose highest variable is x_k, 1 <= k <= dim.
  const std::vector<LinearConstraint>& level(int k) const { return levels_[k - 1]; }

  /**
   * Exact integer bounds for x_k given fixed prefix values x_1..x_{k-1}
   * that satisfied the bounds of the earlier levels. The interval may be
   * empty (lo > hi) when no integer completion exists.
   */
  void bounds(int k, const IntVector& prefix, Int& lo, Int& hi) const;

 private:
  int dim_;
  bool empty_ = false;
  std::vector<std::vector<LinearConstraint>> levels_;
};

}  // namespace hstar
