#include "hstar/triangulation.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <utility>

#include "hstar/errors.hpp"
#include "hstar/fourier_motzkin.hpp"

namespace hstar {

namespace {

IntMatrix cell_edge_matrix(const PointConfiguration& config,
                           const std::vector<int>& cell) {
  std::vector<std::vector<Int>> rows;
  rows.reserve(cell.size() - 1);
  for (size_t i = 1; i < cell.size(); ++i)
    rows.push_back(vec_sub(config.points[cell[i]], config.points[cell[0]]));
  return IntMatrix(rows);
}

Int cell_volume(const PointConfiguration& config, const std::vector<int>& cell) {
  return abs(det(cell_edge_matrix(config, cell)));
}

std::string cell_str(const std::vector<int>& cell) {
  std::string out = "{";
  for (size_t i = 0; i < cell.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(cell[i]);
  }
  return out + "}";
}

// Lifted hyperplane z = alpha.x + c through the cell's points; nullopt when
// the lift is vertical (affinely dependent cell).
struct Lift {
  RatVector alpha;
  Rat offset;
};

std::optional<Lift> lift_hyperplane(const PointConfiguration& config,
                                    const std::vector<Rat>& w,
                                    const std::vector<int>& cell) {
  const int d = config.dim;
  IntMatrix a(d + 1, d + 1);
  RatVector rhs(d + 1);
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j < d; ++j) a(i, j) = config.points[cell[i]][j];
    a(i, d) = 1;
    rhs[i] = w[cell[i]];
  }
  try {
    RatVector sol = solve_exact(a, rhs);
    Lift lift;
    lift.alpha.assign(sol.begin(), sol.begin() + d);
    lift.offset = sol[d];
    return lift;
  } catch (const SingularMatrixError&) {
    return std::nullopt;
  }
}

Rat lift_value(const Lift& lift, const IntVector& p) {
  Rat acc = lift.offset;
  for (size_t j = 0; j < p.size(); ++j) acc += lift.alpha[j] * Rat(p[j]);
  return acc;
}

uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

PointConfiguration PointConfiguration::create(int dim, std::vector<IntVector> points) {
  if (dim < 1) throw InputError("PointConfiguration: dimension must be >= 1");
  for (const IntVector& p : points)
    if (static_cast<int>(p.size()) != dim)
      throw InputError("PointConfiguration: point length does not match dimension");
  {
    std::set<IntVector> seen(points.begin(), points.end());
    if (seen.size() != points.size())
      throw InputError("PointConfiguration: points are not pairwise distinct");
  }
  if (static_cast<int>(points.size()) < dim + 1)
    throw DegeneracyError("PointConfiguration: too few points to span");
  std::vector<std::vector<Int>> rows;
  for (size_t i = 1; i < points.size(); ++i)
    rows.push_back(vec_sub(points[i], points[0]));
  if (rank(IntMatrix(rows)) != dim)
    throw DegeneracyError("PointConfiguration: points do not affinely span");
  PointConfiguration out;
  out.dim = dim;
  out.points = std::move(points);
  return out;
}

Triangulation Triangulation::create(PointConfiguration config,
                                    std::vector<std::vector<int>> cells,
                                    std::optional<std::vector<Rat>> heights) {
  const int d = config.dim;
  const int n = static_cast<int>(config.points.size());
  for (auto& cell : cells) {
    if (static_cast<int>(cell.size()) != d + 1)
      throw InputError("Triangulation: cell " + cell_str(cell) + " must have " +
                       std::to_string(d + 1) + " points");
    std::sort(cell.begin(), cell.end());
    for (size_t i = 0; i < cell.size(); ++i) {
      if (cell[i] < 0 || cell[i] >= n)
        throw InputError("Triangulation: cell index out of range");
      if (i > 0 && cell[i] == cell[i - 1])
        throw InputError("Triangulation: repeated index in cell " + cell_str(cell));
    }
  }
  std::sort(cells.begin(), cells.end());
  for (size_t i = 1; i < cells.size(); ++i)
    if (cells[i] == cells[i - 1])
      throw InputError("Triangulation: duplicate cell " + cell_str(cells[i]));
  if (heights && static_cast<int>(heights->size()) != n)
    throw InputError("Triangulation: one height per point required");
  Triangulation out;
  out.config = std::move(config);
  for (const auto& cell : cells)
    if (cell_volume(out.config, cell) == 0)
      throw DegeneracyError("Triangulation: cell " + cell_str(cell) +
                            " is affinely dependent");
  out.cells = std::move(cells);
  out.heights = std::move(heights);
  return out;
}

CoveringReport check_covering(const Triangulation& t, const LatticePolytope& p) {
  const PointConfiguration& config = t.config;
  if (config.dim != p.dim())
    throw InputError("check_covering: dimension mismatch");
  const HRep& h = p.hrep();
  for (const IntVector& pt : config.points)
    if (!contains(h, pt, PointLocation::Closed))
      throw InputError("check_covering: configuration point outside the polytope");

  CoveringReport report;
  report.polytope_volume = p.normalized_volume();
  report.cell_volume_sum = 0;
  for (const auto& cell : t.cells)
    report.cell_volume_sum += cell_volume(config, cell);
  report.volume_matches = (report.cell_volume_sum == report.polytope_volume);
  if (!report.volume_matches)
    report.witness = "cell volumes sum to " + to_string(report.cell_volume_sum) +
                     ", polytope volume is " + to_string(report.polytope_volume);

  // Pairwise open-interior disjointness, exactly: the combined strict
  // systems of two cells are feasible iff their interiors meet.
  report.interiors_disjoint = true;
  std::vector<HRep> cell_hreps;
  cell_hreps.reserve(t.cells.size());
  for (const auto& cell : t.cells) {
    std::vector<IntVector> verts;
    for (int idx : cell) verts.push_back(config.points[idx]);
    cell_hreps.push_back(simplex_hrep(LatticePolytope(config.dim, std::move(verts))));
  }
  for (size_t i = 0; i < t.cells.size() && report.interiors_disjoint; ++i)
    for (size_t j = i + 1; j < t.cells.size(); ++j) {
      std::vector<LinearConstraint> rows;
      for (const HalfSpace& hs : cell_hreps[i].halfspaces)
        rows.push_back({hs.a, hs.b, true});
      for (const HalfSpace& hs : cell_hreps[j].halfspaces)
        rows.push_back({hs.a, hs.b, true});
      if (fm_feasible(rows, config.dim)) {
        report.interiors_disjoint = false;
        report.witness = "cells " + cell_str(t.cells[i]) + " and " +
                         cell_str(t.cells[j]) + " have intersecting interiors";
        break;
      }
    }

  std::set<int> used;
  for (const auto& cell : t.cells) used.insert(cell.begin(), cell.end());
  report.uses_all_points = (static_cast<int>(used.size()) ==
                            static_cast<int>(config.points.size()));
  return report;
}

bool check_unimodular(const Triangulation& t) {
  for (const auto& cell : t.cells)
    if (cell_volume(t.config, cell) != 1) return false;
  return true;
}

bool flag_complex_check(const std::vector<std::vector<int>>& cells) {
  std::set<std::vector<int>> faces;
  std::set<int> vertices;
  size_t max_cell = 0;
  for (const auto& cell : cells) {
    std::vector<int> sorted = cell;
    std::sort(sorted.begin(), sorted.end());
    max_cell = std::max(max_cell, sorted.size());
    vertices.insert(sorted.begin(), sorted.end());
    // All subsets of the cell are faces.
    const size_t m = sorted.size();
    for (size_t mask = 1; mask < (size_t(1) << m); ++mask) {
      std::vector<int> face;
      for (size_t b = 0; b < m; ++b)
        if (mask & (size_t(1) << b)) face.push_back(sorted[b]);
      faces.insert(std::move(face));
    }
  }
  if (cells.empty()) return true;

  std::set<std::pair<int, int>> edges;
  for (const auto& f : faces)
    if (f.size() == 2) edges.insert({f[0], f[1]});
  auto adjacent = [&](int u, int v) {
    return edges.count({std::min(u, v), std::max(u, v)}) > 0;
  };

  // Grow cliques; each clique visited must be a face, otherwise some
  // minimal non-face has three or more elements.
  std::vector<int> verts(vertices.begin(), vertices.end());
  auto extend = [&](auto&& self, std::vector<int>& clique) -> bool {
    if (clique.size() > max_cell) return false;  // clique too big to be a face
    if (clique.size() >= 3 && !faces.count(clique)) return false;
    for (int w : verts) {
      if (w <= clique.back()) continue;
      bool all = true;
      for (int u : clique)
        if (!adjacent(u, w)) {
          all = false;
          break;
        }
      if (!all) continue;
      clique.push_back(w);
      const bool ok = self(self, clique);
      clique.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  for (const auto& [u, v] : edges) {
    std::vector<int> clique{u, v};
    if (!extend(extend, clique)) return false;
  }
  return true;
}

bool check_flag(const Triangulation& t) { return flag_complex_check(t.cells); }

RegularityReport check_regular_with_heights(const Triangulation& t,
                                            const std::vector<Rat>& w,
                                            PointUsePolicy policy) {
  const PointConfiguration& config = t.config;
  const int n = static_cast<int>(config.points.size());
  if (static_cast<int>(w.size()) != n)
    throw InputError("check_regular_with_heights: one height per point required");

  std::set<int> used;
  for (const auto& cell : t.cells) used.insert(cell.begin(), cell.end());
  if (policy == PointUsePolicy::RequireAllPoints &&
      static_cast<int>(used.size()) != n) {
    for (int i = 0; i < n; ++i)
      if (!used.count(i))
        return {false, "point " + std::to_string(i) +
                           " is unused (full point set required)"};
  }

  for (const auto& cell : t.cells) {
    const std::optional<Lift> lift = lift_hyperplane(config, w, cell);
    if (!lift)
      return {false, "degenerate (vertical) lift over cell " + cell_str(cell)};
    for (int j = 0; j < n; ++j) {
      if (std::find(cell.begin(), cell.end(), j) != cell.end()) continue;
      if (policy == PointUsePolicy::AllowSubconfiguration && !used.count(j))
        continue;
      const Rat lifted = Rat(w[j]) - lift_value(*lift, config.points[j]);
      if (!(lifted > 0))
        return {false, "point " + std::to_string(j) +
                           " does not lift strictly above cell " + cell_str(cell)};
    }
  }
  return {true, "all points lift strictly above every non-incident cell"};
}

Triangulation regular_from_heights(const PointConfiguration& config,
                                   const std::vector<Rat>& w,
                                   const LatticePolytope& hull) {
  const int d = config.dim;
  const int n = static_cast<int>(config.points.size());
  if (d > kRegularMaxDim)
    throw CapabilityError("regular_from_heights: dimension exceeds " +
                          std::to_string(kRegularMaxDim));
  if (n > kRegularMaxPoints)
    throw CapabilityError("regular_from_heights: more than " +
                          std::to_string(kRegularMaxPoints) + " points");
  if (static_cast<int>(w.size()) != n)
    throw InputError("regular_from_heights: one height per point required");

  std::vector<std::vector<int>> cells;
  std::vector<int> subset(d + 1);
  // Lexicographic sweep over all (d+1)-subsets.
  auto sweep = [&](auto&& self, int pos, int start) -> void {
    if (pos == d + 1) {
      const std::optional<Lift> lift = lift_hyperplane(config, w, subset);
      if (!lift) return;  // affinely dependent subset
      bool is_cell = true;
      std::vector<int> on_plane;
      for (int j = 0; j < n && is_cell; ++j) {
        if (std::find(subset.begin(), subset.end(), j) != subset.end()) continue;
        const Rat diff = Rat(w[j]) - lift_value(*lift, config.points[j]);
        if (diff < 0) is_cell = false;
        if (diff == 0) on_plane.push_back(j);
      }
      if (is_cell && !on_plane.empty())
        throw DegeneracyError(
            "regular_from_heights: point " + std::to_string(on_plane.front()) +
            " lies on the lifted hyperplane of cell " + cell_str(subset) +
            "; heights are degenerate");
      if (is_cell) cells.push_back(subset);
      return;
    }
    for (int i = start; i < n; ++i) {
      subset[pos] = i;
      self(self, pos + 1, i + 1);
    }
  };
  sweep(sweep, 0, 0);

  Triangulation t = Triangulation::create(config, std::move(cells), {w});
  const CoveringReport covering = check_covering(t, hull);
  if (!covering.covering())
    throw InvariantViolation("regular_from_heights: lower envelope is not a "
                             "covering: " + covering.witness);
  return t;
}

std::optional<RfuSearchResult> search_rfu(const LatticePolytope& p,
                                          std::uint64_t trials,
                                          std::uint64_t seed) {
  const PointConfiguration config =
      PointConfiguration::create(p.dim(), p.lattice_points(PointLocation::Closed));
  if (p.dim() > kRegularMaxDim)
    throw CapabilityError("search_rfu: dimension exceeds " +
                          std::to_string(kRegularMaxDim));
  if (static_cast<int>(config.points.size()) > kRegularMaxPoints)
    throw CapabilityError("search_rfu: lattice point count exceeds " +
                          std::to_string(kRegularMaxPoints));

  const int n = static_cast<int>(config.points.size());
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    // Per-trial generator, derived deterministically from (seed, trial).
    std::mt19937_64 rng(splitmix64(seed + 0x9E3779B97F4A7C15ull * (trial + 1)));
    std::vector<Int> heights(n);
    std::vector<Rat> w(n);
    for (int i = 0; i < n; ++i) {
      heights[i] = Int(rng() & ((std::uint64_t(1) << 20) - 1));
      w[i] = Rat(heights[i]);
    }
    Triangulation t{};
    try {
      t = regular_from_heights(config, w, p);
    } catch (const DegeneracyError&) {
      continue;  // retry with fresh heights
    }
    const CoveringReport covering = check_covering(t, p);
    if (!covering.covering() || !covering.uses_all_points) continue;
    if (!check_unimodular(t)) continue;
    if (!check_flag(t)) continue;
    return RfuSearchResult{std::move(t), std::move(heights), trial, seed};
  }
  return std::nullopt;
}

}  // namespace hstar
