#pragma once

#include <vector>

#include "hstar/polytope.hpp"
#include "hstar/unimodular_map.hpp"

namespace hstar {

/**
 * A constructed family member together with its vertices in construction
 * order (column order of the defining matrix). The polytope itself stores
 * vertices canonically, so the labels keep vertex identities addressable
 * for incidence checks.
 */
struct FamilySimplex {
  LatticePolytope polytope;
  std::vector<IntVector> columns;
};

/// The self-dual reflexive (n-1)-simplex Q_n; columns are C_0..C_{n-1}.
/// Requires n >= 2.
FamilySimplex make_qn(int n);

/// Closed-form facet description of Q_n: k x_k - sum_{i<k} x_i <= 1 for
/// 1 <= k <= n-1, and -sum x_i <= 1. Requires n >= 2.
HRep hrep_qn(int n);

/// The lecture hall n-simplex R_n. Requires n >= 2.
FamilySimplex make_rn(int n);

/// The reduced (n-1)-simplex obtained from R_n's vertex matrix by deleting
/// its last column and bottom row. Requires n >= 2.
FamilySimplex make_rn_tilde(int n);

/// Upper-triangular all-ones (n-1)x(n-1) matrix; determinant 1.
IntMatrix make_un(int n);

/// The map x -> -((x - 1) U_n), premultiplied into a single affine
/// unimodular map; sends Q_n onto R~_n exactly.
AffineUnimodularMap qn_to_rntilde(int n);

}  // namespace hstar
