#include "hstar/families.hpp"

#include <string>
#include <utility>

#include "hstar/errors.hpp"

namespace hstar {

namespace {

void require_n(int n) {
  if (n < 2) throw InputError("family constructors require n >= 2, got " +
                              std::to_string(n));
}

}  // namespace

// Vertex C_j of Q_n in coordinates (x_1..x_{n-1}), reading the defining
// matrix bottom row first: x_k = 1 for k < n-j, x_{n-j} = -(n-j), 0 beyond.
FamilySimplex make_qn(int n) {
  require_n(n);
  const int d = n - 1;
  std::vector<IntVector> columns;
  columns.reserve(n);
  for (int j = 0; j < n; ++j) {
    IntVector c(d, Int(0));
    for (int k = 1; k < n - j; ++k) c[k - 1] = 1;
    if (n - j <= d) c[n - j - 1] = -(n - j);
    columns.push_back(std::move(c));
  }
  return FamilySimplex{LatticePolytope(d, columns), std::move(columns)};
}

HRep hrep_qn(int n) {
  require_n(n);
  const int d = n - 1;
  HRep out;
  out.dim = d;
  for (int k = 1; k <= d; ++k) {
    IntVector a(d, Int(0));
    for (int i = 1; i < k; ++i) a[i - 1] = -1;
    a[k - 1] = k;
    out.halfspaces.push_back({std::move(a), Int(1)});
  }
  out.halfspaces.push_back({IntVector(d, Int(-1)), Int(1)});
  std::sort(out.halfspaces.begin(), out.halfspaces.end());
  return out;
}

// Vertex j of R_n: x_k = k for k >= n+1-j, 0 below (bottom row first).
FamilySimplex make_rn(int n) {
  require_n(n);
  std::vector<IntVector> columns;
  columns.reserve(n + 1);
  for (int j = 0; j <= n; ++j) {
    IntVector c(n, Int(0));
    for (int k = n + 1 - j; k <= n; ++k) c[k - 1] = k;
    columns.push_back(std::move(c));
  }
  return FamilySimplex{LatticePolytope(n, columns), std::move(columns)};
}

// Deleting the last column and bottom row of R_n's matrix shifts the
// coordinates down: x_k = k+1 for k >= n-j, 0 below, for j = 0..n-1.
FamilySimplex make_rn_tilde(int n) {
  require_n(n);
  const int d = n - 1;
  std::vector<IntVector> columns;
  columns.reserve(n);
  for (int j = 0; j < n; ++j) {
    IntVector c(d, Int(0));
    for (int k = n - j; k <= d; ++k) c[k - 1] = k + 1;
    columns.push_back(std::move(c));
  }
  return FamilySimplex{LatticePolytope(d, columns), std::move(columns)};
}

IntMatrix make_un(int n) {
  require_n(n);
  const int d = n - 1;
  IntMatrix u(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j) u(i, j) = 1;
  return u;
}

AffineUnimodularMap qn_to_rntilde(int n) {
  require_n(n);
  const int d = n - 1;
  const IntMatrix un = make_un(n);
  // x -> -((x - 1) U_n) = x (-U_n) + 1 U_n
  return AffineUnimodularMap(un.negated(), vec_mat(IntVector(d, Int(1)), un));
}

}  // namespace hstar
