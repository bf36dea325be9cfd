#pragma once

#include "hstar/linalg.hpp"

namespace hstar {

/**
 * Affine lattice automorphism x -> x U + v (row-vector convention), with
 * U integral of determinant +1 or -1 and v integral. Closed under
 * composition and inverse.
 */
class AffineUnimodularMap {
 public:
  /// Validates det(U) = +-1 and dim(v) = dim(U); throws InputError otherwise.
  AffineUnimodularMap(IntMatrix u, IntVector v);

  static AffineUnimodularMap identity(int dim);

  int dim() const { return u_.rows(); }
  const IntMatrix& u() const { return u_; }
  const IntVector& v() const { return v_; }

  IntVector apply(const IntVector& x) const;

  /// The map "this, then other".
  AffineUnimodularMap then(const AffineUnimodularMap& other) const;

  AffineUnimodularMap inverse() const;

  bool operator==(const AffineUnimodularMap&) const = default;

 private:
  IntMatrix u_;
  IntVector v_;
};

}  // namespace hstar
