#pragma once

#include <optional>
#include <string>

#include "hstar/polytope.hpp"
#include "hstar/unimodular_map.hpp"

namespace hstar {

/** The two sub-results of the reflexivity test, reported separately. */
struct ReflexivityReport {
  bool origin_unique_interior = false;
  bool facet_offsets_one = false;
  std::string witness;

  bool reflexive() const { return origin_unique_interior && facet_offsets_one; }
};

/// P is reflexive iff its unique interior lattice point is the origin and
/// every facet, written with primitive outward normal, has offset 1. The
/// second condition is exactly lattice-ness of the dual for polytopes with
/// the origin interior.
ReflexivityReport is_reflexive(const LatticePolytope& p);

/// Dual polytope of a reflexive polytope: the vertices are the primitive
/// facet normals. Guarded, since duals of non-reflexive polytopes are not
/// lattice polytopes; throws CapabilityError.
LatticePolytope dual_polytope(const LatticePolytope& p);

/**
 * Search for an affine unimodular map sending p1 onto p2. Both must be
 * simplices (CapabilityError otherwise); unequal dimensions or normalized
 * volumes return nullopt immediately. The search fixes the first canonical
 * vertex of p1, tries every image vertex and every ordering of the
 * remaining vertices of p2 in lexicographic order, and solves for U from
 * the edge-vector matrices; the first integral solution with det +-1 whose
 * application reproduces p2 exactly is returned.
 */
std::optional<AffineUnimodularMap> find_equivalence(const LatticePolytope& p1,
                                                    const LatticePolytope& p2);

/// find_equivalence(P, dual(P)) for a reflexive simplex; any returned map
/// is re-verified by application before return.
std::optional<AffineUnimodularMap> is_self_dual(const LatticePolytope& p);

}  // namespace hstar
