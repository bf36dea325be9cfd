#include "hstar/fourier_motzkin.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "hstar/errors.hpp"

namespace hstar {

namespace {

// Index of the last nonzero coefficient, or -1 for a constant row.
int top_var(const LinearConstraint& c) {
  for (int i = static_cast<int>(c.a.size()) - 1; i >= 0; --i)
    if (c.a[i] != 0) return i;
  return -1;
}

void normalize(LinearConstraint& c) {
  Int g = content(c.a);
  g = gcd(g, abs(c.b));
  if (g > 1) {
    for (Int& x : c.a) x /= g;
    c.b /= g;
  }
}

// Combines an upper-bound row (positive coefficient on var v) with a
// lower-bound row (negative coefficient) so that v cancels.
LinearConstraint combine(const LinearConstraint& up, const LinearConstraint& lo, int v) {
  const Int cu = up.a[v];        // > 0
  const Int cl = -lo.a[v];       // > 0
  LinearConstraint out;
  out.a.resize(up.a.size());
  for (size_t i = 0; i < up.a.size(); ++i) out.a[i] = cl * up.a[i] + cu * lo.a[i];
  out.b = cl * up.b + cu * lo.b;
  out.strict = up.strict || lo.strict;
  normalize(out);
  return out;
}

// Keeps the strongest row per primitive normal, evaluates constant rows,
// and reports infeasibility as soon as a constant row fails.
struct Pool {
  std::map<IntVector, LinearConstraint> rows;  // keyed by primitive normal
  bool infeasible = false;

  void insert(LinearConstraint c) {
    if (infeasible) return;
    normalize(c);
    const int tv = top_var(c);
    if (tv < 0) {
      // 0 <= b (or 0 < b): either trivially true or the system is empty.
      if (c.strict ? !(c.b > 0) : !(c.b >= 0)) infeasible = true;
      return;
    }
    IntVector key = primitive(c.a);
    auto it = rows.find(key);
    if (it == rows.end()) {
      rows.emplace(std::move(key), std::move(c));
      return;
    }
    // Compare offsets at a common scale of the shared direction.
    const Int s_old = content(it->second.a);
    const Int s_new = content(c.a);
    const Int lhs = c.b * s_old;
    const Int rhs = it->second.b * s_new;
    const bool stronger =
        lhs < rhs || (lhs == rhs && c.strict && !it->second.strict);
    if (stronger) it->second = std::move(c);
  }
};

}  // namespace

bool fm_feasible(const std::vector<LinearConstraint>& constraints, int dim) {
  if (dim < 0) throw InputError("fm_feasible: negative dimension");
  if (dim > kFourierMotzkinMaxDim)
    throw CapabilityError("fm_feasible: dimension " + std::to_string(dim) +
                          " exceeds the guard of " +
                          std::to_string(kFourierMotzkinMaxDim));
  Pool pool;
  for (const LinearConstraint& c : constraints) {
    if (static_cast<int>(c.a.size()) != dim)
      throw InputError("fm_feasible: constraint length does not match dimension");
    pool.insert(c);
    if (pool.infeasible) return false;
  }
  for (int v = dim - 1; v >= 0; --v) {
    std::vector<LinearConstraint> uppers, lowers, rest;
    for (auto& [key, row] : pool.rows) {
      if (row.a[v] > 0)
        uppers.push_back(std::move(row));
      else if (row.a[v] < 0)
        lowers.push_back(std::move(row));
      else
        rest.push_back(std::move(row));
    }
    Pool next;
    for (LinearConstraint& r : rest) next.insert(std::move(r));
    for (const LinearConstraint& up : uppers)
      for (const LinearConstraint& lo : lowers) {
        next.insert(combine(up, lo, v));
        if (next.infeasible) return false;
      }
    if (next.infeasible) return false;
    pool = std::move(next);
  }
  return !pool.infeasible;
}

bool fm_feasible(const HRep& constraints, const std::vector<bool>& strict_mask) {
  if (strict_mask.size() != constraints.halfspaces.size())
    throw InputError("fm_feasible: strict mask length mismatch");
  std::vector<LinearConstraint> rows;
  rows.reserve(constraints.halfspaces.size());
  for (size_t i = 0; i < constraints.halfspaces.size(); ++i)
    rows.push_back({constraints.halfspaces[i].a, constraints.halfspaces[i].b,
                    strict_mask[i]});
  return fm_feasible(rows, constraints.dim);
}

ProjectionChain::ProjectionChain(const HRep& h) : dim_(h.dim) {
  if (dim_ < 1) throw InputError("ProjectionChain: dimension must be positive");
  levels_.resize(dim_);
  Pool pool;
  for (const HalfSpace& hs : h.halfspaces) {
    if (static_cast<int>(hs.a.size()) != dim_)
      throw InputError("ProjectionChain: halfspace length mismatch");
    pool.insert({hs.a, hs.b, false});
  }
  for (int v = dim_ - 1; v >= 0; --v) {
    std::vector<LinearConstraint> uppers, lowers, rest;
    for (auto& [key, row] : pool.rows) {
      if (row.a[v] > 0)
        uppers.push_back(std::move(row));
      else if (row.a[v] < 0)
        lowers.push_back(std::move(row));
      else
        rest.push_back(std::move(row));
    }
    auto& level = levels_[v];
    level = uppers;
    level.insert(level.end(), lowers.begin(), lowers.end());
    // Enumeration needs finite ranges in every coordinate.
    if (!pool.infeasible && (uppers.empty() || lowers.empty()))
      throw InvariantViolation(
          "ProjectionChain: unbounded direction; input is not a polytope");
    Pool next;
    next.infeasible = pool.infeasible;
    for (LinearConstraint& r : rest) next.insert(std::move(r));
    for (const LinearConstraint& up : uppers)
      for (const LinearConstraint& lo : lowers) next.insert(combine(up, lo, v));
    pool = std::move(next);
  }
  empty_ = pool.infeasible;
}

void ProjectionChain::bounds(int k, const IntVector& prefix, Int& lo, Int& hi) const {
  if (k < 1 || k > dim_) throw InputError("ProjectionChain::bounds: level out of range");
  if (static_cast<int>(prefix.size()) < k - 1)
    throw InputError("ProjectionChain::bounds: prefix too short");
  bool have_lo = false, have_hi = false;
  for (const LinearConstraint& row : levels_[k - 1]) {
    Int residual = row.b;
    for (int i = 0; i < k - 1; ++i) residual -= row.a[i] * prefix[i];
    const Int& c = row.a[k - 1];
    if (c > 0) {
      Int bound = floor_div(residual, c);
      if (!have_hi || bound < hi) hi = bound;
      have_hi = true;
    } else {
      Int bound = ceil_div(residual, c);
      if (!have_lo || bound > lo) lo = bound;
      have_lo = true;
    }
  }
  if (!have_lo || !have_hi)
    throw InvariantViolation("ProjectionChain::bounds: missing bound");
}

}  // namespace hstar
