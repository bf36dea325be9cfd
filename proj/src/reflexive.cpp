#include "hstar/reflexive.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "hstar/errors.hpp"

namespace hstar {

ReflexivityReport is_reflexive(const LatticePolytope& p) {
  ReflexivityReport report;
  const HRep& h = p.hrep();
  report.facet_offsets_one = true;
  for (const HalfSpace& hs : h.halfspaces)
    if (hs.b != 1) {
      report.facet_offsets_one = false;
      report.witness = "facet with offset " + to_string(hs.b);
      break;
    }
  const std::vector<IntVector> interior = p.lattice_points(PointLocation::Interior);
  const IntVector origin(p.dim(), Int(0));
  report.origin_unique_interior = (interior.size() == 1 && interior[0] == origin);
  if (!report.origin_unique_interior && report.witness.empty())
    report.witness = "interior lattice point count = " +
                     std::to_string(interior.size());
  return report;
}

LatticePolytope dual_polytope(const LatticePolytope& p) {
  if (!is_reflexive(p).reflexive())
    throw CapabilityError(
        "dual_polytope: input is not reflexive; its dual is not a lattice "
        "polytope");
  std::vector<IntVector> verts;
  for (const HalfSpace& hs : p.hrep().halfspaces) verts.push_back(hs.a);
  return LatticePolytope(p.dim(), std::move(verts));
}

std::optional<AffineUnimodularMap> find_equivalence(const LatticePolytope& p1,
                                                    const LatticePolytope& p2) {
  if (!p1.is_simplex() || !p2.is_simplex())
    throw CapabilityError("find_equivalence: both polytopes must be simplices");
  if (p1.dim() != p2.dim()) return std::nullopt;
  if (p1.normalized_volume() != p2.normalized_volume()) return std::nullopt;

  const int d = p1.dim();
  const auto& verts1 = p1.vertices();
  const auto& verts2 = p2.vertices();
  const IntVector& base = verts1[0];

  std::vector<std::vector<Int>> rows;
  rows.reserve(d);
  for (int i = 1; i <= d; ++i) rows.push_back(vec_sub(verts1[i], base));
  const IntMatrix e1(rows);
  const Int e1_det = det(e1);
  const IntMatrix e1_adj = adjugate(e1);

  for (int w_idx = 0; w_idx <= d; ++w_idx) {
    const IntVector& w = verts2[w_idx];
    std::vector<int> others;
    for (int i = 0; i <= d; ++i)
      if (i != w_idx) others.push_back(i);
    std::vector<int> order(d);
    std::iota(order.begin(), order.end(), 0);
    do {
      IntMatrix e2(d, d);
      for (int r = 0; r < d; ++r) {
        const IntVector diff = vec_sub(verts2[others[order[r]]], w);
        for (int c = 0; c < d; ++c) e2(r, c) = diff[c];
      }
      // U = E1^{-1} E2 = adj(E1) E2 / det(E1); accept only integral U.
      IntMatrix u = e1_adj * e2;
      bool integral = true;
      for (int r = 0; r < d && integral; ++r)
        for (int c = 0; c < d; ++c)
          if (u(r, c) % e1_det != 0) {
            integral = false;
            break;
          }
      if (!integral) continue;
      for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) u(r, c) /= e1_det;
      if (!is_unimodular(u)) continue;
      IntVector v = vec_sub(w, vec_mat(base, u));
      AffineUnimodularMap candidate(std::move(u), std::move(v));
      if (p1.apply(candidate) == p2) return candidate;
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return std::nullopt;
}

std::optional<AffineUnimodularMap> is_self_dual(const LatticePolytope& p) {
  if (!p.is_simplex())
    throw CapabilityError("is_self_dual: input is not a simplex");
  if (!is_reflexive(p).reflexive())
    throw CapabilityError("is_self_dual: input is not reflexive");
  const LatticePolytope dual = dual_polytope(p);
  std::optional<AffineUnimodularMap> m = find_equivalence(p, dual);
  if (m && !(p.apply(*m) == dual))
    throw InvariantViolation("is_self_dual: returned map failed re-verification");
  return m;
}

}  // namespace hstar
