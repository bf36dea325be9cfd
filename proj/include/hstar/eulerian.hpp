#pragma once

#include "hstar/polynomial.hpp"

namespace hstar {

/// Largest n accepted by the brute-force descent counter (9! permutations).
inline constexpr int kEulerianDescentsMaxN = 9;

/// Eulerian polynomial A_n(z) by the triangle recurrence
/// A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1). Requires n >= 1.
IntPolynomial eulerian_recurrence(int n);

/// A_n(z) by full enumeration of permutations of {1..n}, counting
/// descents (positions i with pi(i) > pi(i+1)). Independent of the
/// recurrence; guarded to n <= kEulerianDescentsMaxN.
IntPolynomial eulerian_descents(int n);

}  // namespace hstar
