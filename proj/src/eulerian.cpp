#include "hstar/eulerian.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "hstar/errors.hpp"

namespace hstar {

IntPolynomial eulerian_recurrence(int n) {
  if (n < 1) throw InputError("eulerian_recurrence: n must be >= 1");
  std::vector<Int> row{Int(1)};  // A_1
  for (int m = 2; m <= n; ++m) {
    std::vector<Int> next(m, Int(0));
    for (int k = 0; k < m; ++k) {
      if (k < m - 1) next[k] += Int(k + 1) * row[k];
      if (k >= 1) next[k] += Int(m - k) * row[k - 1];
    }
    row = std::move(next);
  }
  return IntPolynomial(std::move(row));
}

IntPolynomial eulerian_descents(int n) {
  if (n < 1 || n > kEulerianDescentsMaxN)
    throw CapabilityError("eulerian_descents: n must be in 1.." +
                          std::to_string(kEulerianDescentsMaxN));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<Int> coeffs(n, Int(0));
  do {
    int descents = 0;
    for (int i = 0; i + 1 < n; ++i)
      if (perm[i] > perm[i + 1]) ++descents;
    ++coeffs[descents];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return IntPolynomial(std::move(coeffs));
}

}  // namespace hstar
