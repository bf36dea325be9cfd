#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "hstar/fourier_motzkin.hpp"
#include "hstar/halfspace.hpp"
#include "hstar/linalg.hpp"
#include "hstar/unimodular_map.hpp"

namespace hstar {

/**
 * Full-dimensional lattice polytope given by its vertex list, kept in
 * canonical (lexicographically sorted) order so that equality of polytopes
 * is equality of vertex lists. The facet description is computed on first
 * use and cached; polytopes are immutable afterwards, so every query is
 * safe to run concurrently.
 *
 * Construction validates: matching dimensions, distinct vertices, a
 * full-dimensional affine hull, and irredundancy of the vertex list
 * (automatic for simplices; via convex-hull check in the plane; via exact
 * feasibility for small non-simplices in higher dimension).
 */
class LatticePolytope {
 public:
  LatticePolytope(int dim, std::vector<IntVector> vertices);

  int dim() const { return dim_; }
  const std::vector<IntVector>& vertices() const { return vertices_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  bool is_simplex() const { return vertex_count() == dim_ + 1; }

  /// Facet description with primitive outward normals. Supported for
  /// simplices in any dimension and for polygons (dim 2); other inputs
  /// raise CapabilityError. Computed once, then cached.
  const HRep& hrep() const;

  /// All lattice points (closed) or strictly interior lattice points,
  /// sorted lexicographically.
  std::vector<IntVector> lattice_points(PointLocation mode) const;

  /// d! times the Euclidean volume; simplices and polygons only.
  Int normalized_volume() const;

  LatticePolytope dilate(const Int& k) const;
  LatticePolytope translate(const IntVector& v) const;

  /// conv(P x {0}, e_{d+1}) in dimension d+1.
  LatticePolytope pyramid() const;

  /// Image under x -> x U + v, re-canonicalized.
  LatticePolytope apply(const AffineUnimodularMap& m) const;

  bool operator==(const LatticePolytope& other) const {
    return dim_ == other.dim_ && vertices_ == other.vertices_;
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::optional<HRep> hrep;
    std::optional<ProjectionChain> chain;
  };

  LatticePolytope(int dim, std::vector<IntVector> vertices, HRep precomputed_hrep);

  const ProjectionChain& chain() const;

  int dim_;
  std::vector<IntVector> vertices_;
  std::shared_ptr<Cache> cache_;
};

/// Facet description of a d-simplex: one halfspace per omitted vertex.
/// Every vertex satisfies d of the inequalities with equality and the
/// remaining one strictly. Throws CapabilityError for non-simplices.
HRep simplex_hrep(const LatticePolytope& s);

/// Hull vertices of a polygon in counterclockwise order (dim 2 only).
std::vector<IntVector> polygon_hull_order(const std::vector<IntVector>& vertices);

}  // namespace hstar
