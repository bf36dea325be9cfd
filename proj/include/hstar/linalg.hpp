#pragma once

#include <vector>

#include "hstar/numbers.hpp"

namespace hstar {

using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

/** Dense integer matrix with exact entries, stored row-major. */
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols);
  explicit IntMatrix(const std::vector<std::vector<Int>>& rows);

  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& operator()(int i, int j) const {
    return data_[static_cast<size_t>(i) * cols_ + j];
  }

  IntVector row(int i) const;
  IntMatrix transposed() const;
  IntMatrix negated() const;

  bool operator==(const IntMatrix&) const = default;

 private:
  int rows_;
  int cols_;
  std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

Int dot(const IntVector& a, const IntVector& b);
IntVector vec_add(const IntVector& a, const IntVector& b);
IntVector vec_sub(const IntVector& a, const IntVector& b);
IntVector vec_neg(const IntVector& a);

/// Row vector times matrix: (x M), the action used throughout for maps.
IntVector vec_mat(const IntVector& x, const IntMatrix& m);

/// Exact determinant via Bareiss fraction-free elimination.
Int det(const IntMatrix& m);

/// Rank of the matrix over the rationals, by fraction-free elimination.
int rank(const IntMatrix& m);

/// Adjugate matrix: adj(A) * A = A * adj(A) = det(A) * I.
IntMatrix adjugate(const IntMatrix& m);

/// Unique exact solution x of A x = b (x as column vector). Throws
/// SingularMatrixError when det(A) = 0.
RatVector solve_exact(const IntMatrix& a, const IntVector& b);
RatVector solve_exact(const IntMatrix& a, const RatVector& b);

/// gcd of the absolute values of the entries (0 for the zero vector).
Int content(const IntVector& v);

/// v divided by the gcd of its absolute entries; direction preserved.
/// Throws DegeneracyError for the zero vector.
IntVector primitive(const IntVector& v);

bool is_unimodular(const IntMatrix& m);

/// Exact inverse of a matrix with det = +1 or -1; the result is integral.
IntMatrix inverse_unimodular(const IntMatrix& m);

}  // namespace hstar
