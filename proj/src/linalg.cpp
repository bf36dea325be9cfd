#include "hstar/linalg.hpp"

#include <string>
#include <utility>

#include "hstar/errors.hpp"

namespace hstar {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw InputError("IntMatrix: negative dimensions");
  data_.resize(static_cast<size_t>(rows) * cols);
}

IntMatrix::IntMatrix(const std::vector<std::vector<Int>>& rows)
    : rows_(static_cast<int>(rows.size())), cols_(0) {
  if (rows.empty()) throw InputError("IntMatrix: empty row list");
  cols_ = static_cast<int>(rows.front().size());
  data_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_)
      throw InputError("IntMatrix: ragged row lengths");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::row(int i) const {
  IntVector out(cols_);
  for (int j = 0; j < cols_; ++j) out[j] = (*this)(i, j);
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

IntMatrix IntMatrix::negated() const {
  IntMatrix out(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(i, j) = -(*this)(i, j);
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product: inner dimensions differ");
  IntMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

Int dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw InputError("dot: length mismatch");
  Int out = 0;
  for (size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

IntVector vec_add(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw InputError("vec_add: length mismatch");
  IntVector out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVector vec_sub(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw InputError("vec_sub: length mismatch");
  IntVector out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVector vec_neg(const IntVector& a) {
  IntVector out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

IntVector vec_mat(const IntVector& x, const IntMatrix& m) {
  if (static_cast<int>(x.size()) != m.rows())
    throw InputError("vec_mat: vector length does not match matrix rows");
  IntVector out(m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < m.cols(); ++j) out[j] += x[i] * m(i, j);
  }
  return out;
}

// Bareiss fraction-free elimination on a working copy; every division is
// exact, so all intermediates stay integral.
namespace {

struct BareissResult {
  IntMatrix m;   // upper triangular in the leading square block
  int sign = 1;  // parity of row swaps
  bool singular = false;
};

// Eliminates below the diagonal of the leading n x n block of an n x c
// matrix (c >= n); extra columns ride along (used for solves).
BareissResult bareiss_forward(IntMatrix m) {
  const int n = m.rows();
  BareissResult res{std::move(m), 1, false};
  IntMatrix& a = res.m;
  Int prev = 1;
  for (int k = 0; k < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i)
      if (a(i, k) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) {
      res.singular = true;
      return res;
    }
    if (pivot != k) {
      for (int j = 0; j < a.cols(); ++j) std::swap(a(pivot, j), a(k, j));
      res.sign = -res.sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < a.cols(); ++j)
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return res;
}

}  // namespace

Int det(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("det: matrix is not square");
  const int n = m.rows();
  if (n == 0) return 1;
  BareissResult r = bareiss_forward(m);
  if (r.singular) return 0;
  return r.sign > 0 ? r.m(n - 1, n - 1) : Int(-r.m(n - 1, n - 1));
}

int rank(const IntMatrix& m) {
  IntMatrix a = m;
  const int rows = a.rows(), cols = a.cols();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (a(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < cols; ++j) std::swap(a(pivot, j), a(r, j));
    for (int i = r + 1; i < rows; ++i) {
      if (a(i, c) == 0) continue;
      Int f1 = a(r, c), f2 = a(i, c);
      Int g = gcd(abs(f1), abs(f2));
      f1 /= g;
      f2 /= g;
      for (int j = 0; j < cols; ++j) a(i, j) = f1 * a(i, j) - f2 * a(r, j);
    }
    ++r;
  }
  return r;
}

IntMatrix adjugate(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("adjugate: matrix is not square");
  const int n = m.rows();
  IntMatrix out(n, n);
  if (n == 0) return out;
  if (n == 1) {
    out(0, 0) = 1;
    return out;
  }
  IntMatrix minor(n - 1, n - 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int r = 0, mr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, mc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(mr, mc) = m(r, c);
          ++mc;
        }
        ++mr;
      }
      Int cof = det(minor);
      if ((i + j) % 2 != 0) cof = -cof;
      out(j, i) = cof;  // transposed cofactor
    }
  }
  return out;
}

RatVector solve_exact(const IntMatrix& a, const IntVector& b) {
  if (a.rows() != a.cols()) throw InputError("solve_exact: matrix is not square");
  if (static_cast<int>(b.size()) != a.rows())
    throw InputError("solve_exact: right-hand side length mismatch");
  const int n = a.rows();
  IntMatrix aug(n, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  BareissResult r = bareiss_forward(std::move(aug));
  if (r.singular) throw SingularMatrixError("solve_exact: singular matrix");
  RatVector x(n);
  for (int i = n - 1; i >= 0; --i) {
    Rat acc = Rat(r.m(i, n));
    for (int j = i + 1; j < n; ++j) acc -= Rat(r.m(i, j)) * x[j];
    x[i] = acc / Rat(r.m(i, i));
  }
  return x;
}

RatVector solve_exact(const IntMatrix& a, const RatVector& b) {
  // Clear denominators, solve the integer system, undo the scaling.
  Int lcm = 1;
  for (const Rat& r : b) {
    Int d = denominator(r);
    lcm = lcm / gcd(lcm, d) * d;
  }
  IntVector scaled(b.size());
  for (size_t i = 0; i < b.size(); ++i) {
    const Rat s = b[i] * Rat(lcm);
    scaled[i] = numerator(s);
  }
  RatVector x = solve_exact(a, scaled);
  for (Rat& xi : x) xi /= Rat(lcm);
  return x;
}

Int content(const IntVector& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, abs(x));
  return g;
}

IntVector primitive(const IntVector& v) {
  Int g = content(v);
  if (g == 0) throw DegeneracyError("primitive: zero vector");
  IntVector out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i] / g;
  return out;
}

bool is_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  Int d = det(m);
  return d == 1 || d == -1;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  Int d = det(m);
  if (d != 1 && d != -1)
    throw InputError("inverse_unimodular: determinant is not +1 or -1");
  IntMatrix adj = adjugate(m);
  if (d == -1) adj = adj.negated();
  return adj;
}

}  // namespace hstar
