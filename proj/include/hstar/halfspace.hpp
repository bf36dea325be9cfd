#pragma once

#include <vector>

#include "hstar/linalg.hpp"

namespace hstar {

/** Closed halfspace a.x <= b with primitive integer normal a. */
struct HalfSpace {
  IntVector a;
  Int b;

  bool operator==(const HalfSpace& o) const { return a == o.a && b == o.b; }
  bool operator<(const HalfSpace& o) const {
    return a != o.a ? a < o.a : b < o.b;
  }
};

/** A finite list of halfspaces in a fixed ambient dimension. */
struct HRep {
  int dim = 0;
  std::vector<HalfSpace> halfspaces;

  bool operator==(const HRep&) const = default;
};

enum class PointLocation { Closed, Interior };

/// Membership of p in the intersection: closed uses a.p <= b, interior a.p < b.
/// Throws InputError on dimension mismatch.
bool contains(const HRep& h, const IntVector& p, PointLocation mode);

}  // namespace hstar
