#include "hstar/polytope.hpp"

#include <algorithm>
#include <utility>

#include "hstar/errors.hpp"

namespace hstar {

namespace {

// Edge matrix rows v_i - v_0 for i >= 1.
IntMatrix edge_matrix(const std::vector<IntVector>& vertices) {
  std::vector<std::vector<Int>> rows;
  rows.reserve(vertices.size() - 1);
  for (size_t i = 1; i < vertices.size(); ++i)
    rows.push_back(vec_sub(vertices[i], vertices[0]));
  return IntMatrix(rows);
}

Int cross2(const IntVector& o, const IntVector& a, const IntVector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Feasibility of p in conv(others), exactly, in barycentric variables.
bool in_convex_hull_fm(const IntVector& p, const std::vector<IntVector>& others) {
  const int m = static_cast<int>(others.size());
  const int d = static_cast<int>(p.size());
  std::vector<LinearConstraint> rows;
  // lambda_i >= 0
  for (int i = 0; i < m; ++i) {
    LinearConstraint c;
    c.a.assign(m, Int(0));
    c.a[i] = -1;
    c.b = 0;
    rows.push_back(std::move(c));
  }
  // sum lambda_i = 1
  {
    LinearConstraint le, ge;
    le.a.assign(m, Int(1));
    le.b = 1;
    ge.a.assign(m, Int(-1));
    ge.b = -1;
    rows.push_back(std::move(le));
    rows.push_back(std::move(ge));
  }
  // sum lambda_i * others[i] = p, coordinate-wise
  for (int c = 0; c < d; ++c) {
    LinearConstraint le, ge;
    le.a.resize(m);
    ge.a.resize(m);
    for (int i = 0; i < m; ++i) {
      le.a[i] = others[i][c];
      ge.a[i] = -others[i][c];
    }
    le.b = p[c];
    ge.b = -p[c];
    rows.push_back(std::move(le));
    rows.push_back(std::move(ge));
  }
  return fm_feasible(rows, m);
}

}  // namespace

bool contains(const HRep& h, const IntVector& p, PointLocation mode) {
  if (static_cast<int>(p.size()) != h.dim)
    throw InputError("contains: point dimension does not match halfspaces");
  for (const HalfSpace& hs : h.halfspaces) {
    const Int v = dot(hs.a, p);
    if (mode == PointLocation::Closed ? v > hs.b : v >= hs.b) return false;
  }
  return true;
}

std::vector<IntVector> polygon_hull_order(const std::vector<IntVector>& vertices) {
  for (const IntVector& v : vertices)
    if (v.size() != 2) throw InputError("polygon_hull_order: points must be planar");
  std::vector<IntVector> pts = vertices;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const size_t n = pts.size();
  if (n < 3) throw DegeneracyError("polygon_hull_order: fewer than three distinct points");
  // Andrew's monotone chain with strict turns, so collinear midpoints are
  // not reported as hull vertices.
  std::vector<IntVector> hull(2 * n);
  size_t k = 0;
  for (size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross2(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (size_t i = n - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross2(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

LatticePolytope::LatticePolytope(int dim, std::vector<IntVector> vertices)
    : dim_(dim), vertices_(std::move(vertices)), cache_(std::make_shared<Cache>()) {
  if (dim_ < 1) throw InputError("LatticePolytope: dimension must be >= 1");
  for (const IntVector& v : vertices_)
    if (static_cast<int>(v.size()) != dim_)
      throw InputError("LatticePolytope: vertex length does not match dimension");
  std::sort(vertices_.begin(), vertices_.end());
  for (size_t i = 1; i < vertices_.size(); ++i)
    if (vertices_[i] == vertices_[i - 1])
      throw InputError("LatticePolytope: duplicate vertex");
  const int m = vertex_count();
  if (m < dim_ + 1)
    throw DegeneracyError("LatticePolytope: too few vertices to span dimension " +
                          std::to_string(dim_));
  if (rank(edge_matrix(vertices_)) != dim_)
    throw DegeneracyError("LatticePolytope: vertices do not span the ambient space");
  if (m == dim_ + 1) return;  // simplex: affine independence is irredundancy
  if (dim_ == 2) {
    if (static_cast<int>(polygon_hull_order(vertices_).size()) != m)
      throw InputError("LatticePolytope: vertex list is not irredundant");
    return;
  }
  if (m - 1 > kFourierMotzkinMaxDim)
    throw CapabilityError(
        "LatticePolytope: irredundancy check for large non-simplex vertex lists "
        "is not supported above dimension 2");
  for (int i = 0; i < m; ++i) {
    std::vector<IntVector> others;
    others.reserve(m - 1);
    for (int j = 0; j < m; ++j)
      if (j != i) others.push_back(vertices_[j]);
    if (in_convex_hull_fm(vertices_[i], others))
      throw InputError("LatticePolytope: vertex list is not irredundant");
  }
}

LatticePolytope::LatticePolytope(int dim, std::vector<IntVector> vertices,
                                 HRep precomputed_hrep)
    : LatticePolytope(dim, std::move(vertices)) {
  cache_->hrep = std::move(precomputed_hrep);
}

HRep simplex_hrep(const LatticePolytope& s) {
  if (!s.is_simplex())
    throw CapabilityError("simplex_hrep: input is not a simplex");
  const int d = s.dim();
  const auto& verts = s.vertices();
  HRep out;
  out.dim = d;
  for (int omit = 0; omit <= d; ++omit) {
    std::vector<IntVector> kept;
    kept.reserve(d);
    for (int i = 0; i <= d; ++i)
      if (i != omit) kept.push_back(verts[i]);
    // Facet normal from the cofactor vector of the facet's edge matrix.
    IntVector a(d);
    if (d == 1) {
      a[0] = 1;
    } else {
      std::vector<std::vector<Int>> rows;
      rows.reserve(d - 1);
      for (int i = 1; i < d; ++i) rows.push_back(vec_sub(kept[i], kept[0]));
      IntMatrix edges(rows);
      IntMatrix minor(d - 1, d - 1);
      for (int c = 0; c < d; ++c) {
        for (int i = 0; i < d - 1; ++i)
          for (int j = 0, mj = 0; j < d; ++j) {
            if (j == c) continue;
            minor(i, mj++) = edges(i, j);
          }
        Int cof = det(minor);
        a[c] = (c % 2 == 0) ? cof : Int(-cof);
      }
    }
    if (content(a) == 0)
      throw DegeneracyError("simplex_hrep: degenerate facet");
    a = primitive(a);
    Int b = dot(a, kept[0]);
    const Int inside = dot(a, verts[omit]);
    if (inside == b) throw DegeneracyError("simplex_hrep: omitted vertex on facet");
    if (inside > b) {
      a = vec_neg(a);
      b = -b;
    }
    out.halfspaces.push_back({std::move(a), std::move(b)});
  }
  std::sort(out.halfspaces.begin(), out.halfspaces.end());
  return out;
}

namespace {

HRep polygon_hrep(const std::vector<IntVector>& vertices) {
  const std::vector<IntVector> hull = polygon_hull_order(vertices);
  HRep out;
  out.dim = 2;
  const size_t n = hull.size();
  for (size_t i = 0; i < n; ++i) {
    const IntVector& p = hull[i];
    const IntVector& q = hull[(i + 1) % n];
    // Outward normal of a counterclockwise edge.
    IntVector a{q[1] - p[1], p[0] - q[0]};
    a = primitive(a);
    out.halfspaces.push_back({a, dot(a, p)});
  }
  std::sort(out.halfspaces.begin(), out.halfspaces.end());
  return out;
}

}  // namespace

const HRep& LatticePolytope::hrep() const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (!cache_->hrep) {
    if (is_simplex())
      cache_->hrep = simplex_hrep(*this);
    else if (dim_ == 2)
      cache_->hrep = polygon_hrep(vertices_);
    else
      throw CapabilityError(
          "hrep: facet description supported for simplices and polygons only");
  }
  return *cache_->hrep;
}

const ProjectionChain& LatticePolytope::chain() const {
  const HRep& h = hrep();
  std::lock_guard<std::mutex> lock(cache_->mutex);
  if (!cache_->chain) cache_->chain.emplace(h);
  return *cache_->chain;
}

std::vector<IntVector> LatticePolytope::lattice_points(PointLocation mode) const {
  std::optional<ProjectionChain> interior_chain;
  const ProjectionChain* chain_ptr;
  if (mode == PointLocation::Interior) {
    // For integer points and integral data, a.x < b is exactly a.x <= b-1.
    HRep strict = hrep();
    for (HalfSpace& hs : strict.halfspaces) hs.b -= 1;
    interior_chain.emplace(strict);
    chain_ptr = &*interior_chain;
  } else {
    chain_ptr = &chain();
  }
  std::vector<IntVector> out;
  if (chain_ptr->empty()) return out;
  IntVector point(dim_);
  // Depth-first sweep in lexicographic order.
  auto descend = [&](auto&& self, int k) -> void {
    Int lo, hi;
    chain_ptr->bounds(k, point, lo, hi);
    for (Int x = lo; x <= hi; ++x) {
      point[k - 1] = x;
      if (k == dim_)
        out.push_back(point);
      else
        self(self, k + 1);
    }
  };
  descend(descend, 1);
  return out;
}

Int LatticePolytope::normalized_volume() const {
  if (is_simplex()) return abs(det(edge_matrix(vertices_)));
  if (dim_ == 2) {
    const std::vector<IntVector> hull = polygon_hull_order(vertices_);
    Int total = 0;
    for (size_t i = 1; i + 1 < hull.size(); ++i) {
      IntMatrix tri(std::vector<std::vector<Int>>{vec_sub(hull[i], hull[0]),
                                                  vec_sub(hull[i + 1], hull[0])});
      total += abs(det(tri));
    }
    return total;
  }
  throw CapabilityError(
      "normalized_volume: supported for simplices and polygons only");
}

LatticePolytope LatticePolytope::dilate(const Int& k) const {
  if (k < 1) throw InputError("dilate: factor must be a positive integer");
  std::vector<IntVector> verts = vertices_;
  for (IntVector& v : verts)
    for (Int& x : v) x *= k;
  std::optional<HRep> scaled;
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (cache_->hrep) {
      scaled = *cache_->hrep;
      for (HalfSpace& hs : scaled->halfspaces) hs.b *= k;
    }
  }
  if (scaled) return LatticePolytope(dim_, std::move(verts), std::move(*scaled));
  return LatticePolytope(dim_, std::move(verts));
}

LatticePolytope LatticePolytope::translate(const IntVector& t) const {
  if (static_cast<int>(t.size()) != dim_)
    throw InputError("translate: vector length does not match dimension");
  std::vector<IntVector> verts = vertices_;
  for (IntVector& v : verts) v = vec_add(v, t);
  std::optional<HRep> shifted;
  {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (cache_->hrep) {
      shifted = *cache_->hrep;
      for (HalfSpace& hs : shifted->halfspaces) hs.b += dot(hs.a, t);
    }
  }
  if (shifted) return LatticePolytope(dim_, std::move(verts), std::move(*shifted));
  return LatticePolytope(dim_, std::move(verts));
}

LatticePolytope LatticePolytope::pyramid() const {
  std::vector<IntVector> verts;
  verts.reserve(vertices_.size() + 1);
  for (const IntVector& v : vertices_) {
    IntVector lifted = v;
    lifted.push_back(0);
    verts.push_back(std::move(lifted));
  }
  IntVector apex(dim_ + 1, Int(0));
  apex[dim_] = 1;
  verts.push_back(std::move(apex));
  return LatticePolytope(dim_ + 1, std::move(verts));
}

LatticePolytope LatticePolytope::apply(const AffineUnimodularMap& m) const {
  if (m.dim() != dim_)
    throw InputError("apply: map dimension does not match polytope");
  std::vector<IntVector> verts;
  verts.reserve(vertices_.size());
  for (const IntVector& v : vertices_) verts.push_back(m.apply(v));
  return LatticePolytope(dim_, std::move(verts));
}

}  // namespace hstar
