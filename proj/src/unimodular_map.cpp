#include "hstar/unimodular_map.hpp"

#include <utility>

#include "hstar/errors.hpp"

namespace hstar {

AffineUnimodularMap::AffineUnimodularMap(IntMatrix u, IntVector v)
    : u_(std::move(u)), v_(std::move(v)) {
  if (u_.rows() != u_.cols())
    throw InputError("AffineUnimodularMap: matrix must be square");
  if (static_cast<int>(v_.size()) != u_.rows())
    throw InputError("AffineUnimodularMap: translation length mismatch");
  if (!is_unimodular(u_))
    throw InputError("AffineUnimodularMap: determinant is not +1 or -1");
}

AffineUnimodularMap AffineUnimodularMap::identity(int dim) {
  return AffineUnimodularMap(IntMatrix::identity(dim), IntVector(dim, Int(0)));
}

IntVector AffineUnimodularMap::apply(const IntVector& x) const {
  return vec_add(vec_mat(x, u_), v_);
}

AffineUnimodularMap AffineUnimodularMap::then(const AffineUnimodularMap& other) const {
  // x (U1 U2) + (v1 U2 + v2)
  return AffineUnimodularMap(u_ * other.u_,
                             vec_add(vec_mat(v_, other.u_), other.v_));
}

AffineUnimodularMap AffineUnimodularMap::inverse() const {
  IntMatrix inv = inverse_unimodular(u_);
  return AffineUnimodularMap(inv, vec_neg(vec_mat(v_, inv)));
}

}  // namespace hstar
