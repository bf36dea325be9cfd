#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hstar/polytope.hpp"

namespace hstar {

/** Distinct points affinely spanning R^d, the vertex pool of a triangulation. */
struct PointConfiguration {
  int dim = 0;
  std::vector<IntVector> points;

  /// Validates distinctness and full affine span; throws on failure.
  static PointConfiguration create(int dim, std::vector<IntVector> points);
};

/**
 * A simplicial complex on a point configuration: cells are (d+1)-element
 * index sets, each affinely independent, plus an optional height witness
 * for regularity. Cell indices are stored sorted, cells deduplicated.
 */
struct Triangulation {
  PointConfiguration config;
  std::vector<std::vector<int>> cells;
  std::optional<std::vector<Rat>> heights;

  static Triangulation create(PointConfiguration config,
                              std::vector<std::vector<int>> cells,
                              std::optional<std::vector<Rat>> heights = std::nullopt);
};

/// Whether a certificate must use every configuration point as a vertex.
/// Full lattice point sets are the default; the sub-configuration policy
/// keeps the checkers reusable for partial point sets.
enum class PointUsePolicy { RequireAllPoints, AllowSubconfiguration };

struct CoveringReport {
  bool volume_matches = false;
  bool interiors_disjoint = false;
  bool uses_all_points = false;
  Int cell_volume_sum;
  Int polytope_volume;
  std::string witness;

  /// Covering proper: volumes add up and interiors are pairwise disjoint.
  bool covering() const { return volume_matches && interiors_disjoint; }
};

/// Exact covering certificate: sum of |cell determinant| equals the
/// normalized volume of p, and every pair of cells has disjoint interiors
/// (strict feasibility via Fourier-Motzkin). Also reports whether every
/// configuration point is used by some cell.
CoveringReport check_covering(const Triangulation& t, const LatticePolytope& p);

/// True iff every cell has edge-matrix determinant +1 or -1.
bool check_unimodular(const Triangulation& t);

/// Flagness of an abstract simplicial complex given by its maximal cells:
/// every vertex subset pairwise connected in the 1-skeleton must be a face
/// (all minimal non-faces have exactly two elements).
bool flag_complex_check(const std::vector<std::vector<int>>& cells);

bool check_flag(const Triangulation& t);

struct RegularityReport {
  bool regular = false;
  std::string witness;
};

/// True iff for every cell, the hyperplane through its lifted points is
/// non-vertical and every other point lifts strictly above it. Under
/// RequireAllPoints, a point unused by every cell fails the check.
RegularityReport check_regular_with_heights(
    const Triangulation& t, const std::vector<Rat>& w,
    PointUsePolicy policy = PointUsePolicy::RequireAllPoints);

/// Guards for the subset enumeration in regular_from_heights.
inline constexpr int kRegularMaxDim = 5;
inline constexpr int kRegularMaxPoints = 40;

/**
 * Lower-envelope triangulation induced by the heights w: cells are all
 * affinely independent (d+1)-subsets whose lifted hyperplane has every
 * other point strictly above. A point lying on a cell's hyperplane without
 * belonging to the cell means the heights are degenerate: DegeneracyError
 * (callers retry with fresh heights). `hull` is the convex hull of the
 * configuration, used to verify the result passes check_covering.
 */
Triangulation regular_from_heights(const PointConfiguration& config,
                                   const std::vector<Rat>& w,
                                   const LatticePolytope& hull);

struct RfuSearchResult {
  Triangulation triangulation;
  std::vector<Int> heights;
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;
};

/**
 * Randomized search for a regular, flag, unimodular triangulation of the
 * full lattice point set of p. Integer heights are drawn uniformly from
 * [0, 2^20) with per-trial seeds derived deterministically from
 * (seed, trial index). Returns the first witness passing covering,
 * unimodularity and flagness together, or nullopt after `trials` failures
 * (absence is not a disproof).
 */
std::optional<RfuSearchResult> search_rfu(const LatticePolytope& p,
                                          std::uint64_t trials,
                                          std::uint64_t seed);

}  // namespace hstar
