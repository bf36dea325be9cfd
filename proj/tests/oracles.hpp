// Test-only oracles, kept independent of the implementation paths they
// check: brute-force box enumeration with barycentric membership (no
// facet machinery), cofactor-expansion determinants (no Bareiss), and a
// series-product route to the delta coefficients (no binomial formula).
#pragma once

#include <utility>
#include <vector>

#include "hstar/halfspace.hpp"
#include "hstar/linalg.hpp"
#include "hstar/numbers.hpp"

namespace hstar::oracle {

inline Int naive_det(const IntMatrix& m) {
  const int n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int acc = 0;
  IntMatrix minor(n - 1, n - 1);
  for (int c = 0; c < n; ++c) {
    for (int i = 1; i < n; ++i)
      for (int j = 0, mj = 0; j < n; ++j) {
        if (j == c) continue;
        minor(i - 1, mj++) = m(i, j);
      }
    const Int term = m(0, c) * naive_det(minor);
    acc += (c % 2 == 0) ? term : Int(-term);
  }
  return acc;
}

// All lattice points of the vertex bounding box that lie in the simplex,
// decided by exact barycentric coordinates: p = sum l_i v_i, sum l_i = 1,
// l_i >= 0 (closed) or l_i > 0 (interior).
inline std::vector<IntVector> simplex_points_barycentric(
    const std::vector<IntVector>& verts, bool interior) {
  const int d = static_cast<int>(verts.front().size());
  IntMatrix a(d + 1, d + 1);
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j < d; ++j) a(j, i) = verts[i][j];
    a(d, i) = 1;
  }
  IntVector lo(d), hi(d);
  for (int j = 0; j < d; ++j) {
    lo[j] = hi[j] = verts[0][j];
    for (const auto& v : verts) {
      if (v[j] < lo[j]) lo[j] = v[j];
      if (v[j] > hi[j]) hi[j] = v[j];
    }
  }
  std::vector<IntVector> out;
  IntVector p(d);
  auto sweep = [&](auto&& self, int coord) -> void {
    if (coord == d) {
      IntVector rhs = p;
      rhs.push_back(1);
      RatVector lambda = solve_exact(a, rhs);
      for (const Rat& l : lambda)
        if (interior ? !(l > 0) : l < 0) return;
      out.push_back(p);
      return;
    }
    for (Int x = lo[coord]; x <= hi[coord]; ++x) {
      p[coord] = x;
      self(self, coord + 1);
    }
  };
  sweep(sweep, 0);
  return out;
}

// Same box sweep but against an explicit inequality list.
inline std::vector<IntVector> box_points_in_hrep(const IntVector& lo,
                                                 const IntVector& hi,
                                                 const HRep& h, bool interior) {
  std::vector<IntVector> out;
  const int d = h.dim;
  IntVector p(d);
  auto sweep = [&](auto&& self, int coord) -> void {
    if (coord == d) {
      for (const HalfSpace& hs : h.halfspaces) {
        const Int v = dot(hs.a, p);
        if (interior ? v >= hs.b : v > hs.b) return;
      }
      out.push_back(p);
      return;
    }
    for (Int x = lo[coord]; x <= hi[coord]; ++x) {
      p[coord] = x;
      self(self, coord + 1);
    }
  };
  sweep(sweep, 0);
  return out;
}

// delta coefficients from the truncated series product
// (1-z)^{d+1} * sum_k counts[k] z^k, multiplying polynomials directly.
inline std::vector<Int> series_delta(const std::vector<Int>& counts, int d) {
  std::vector<Int> one_minus_z_pow{Int(1)};
  for (int i = 0; i <= d; ++i) {
    std::vector<Int> next(one_minus_z_pow.size() + 1, Int(0));
    for (size_t t = 0; t < one_minus_z_pow.size(); ++t) {
      next[t] += one_minus_z_pow[t];
      next[t + 1] -= one_minus_z_pow[t];
    }
    one_minus_z_pow = std::move(next);
  }
  std::vector<Int> delta(d + 1, Int(0));
  for (int j = 0; j <= d; ++j)
    for (int t = 0; t <= j && t < static_cast<int>(one_minus_z_pow.size()); ++t)
      delta[j] += one_minus_z_pow[t] * counts[j - t];
  return delta;
}

}  // namespace hstar::oracle
