#include <doctest.h>

#include "hstar/errors.hpp"
#include "hstar/families.hpp"
#include "hstar/reflexive.hpp"

using namespace hstar;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.push_back(Int(x));
  return v;
}

// The functionals of the closed-form facet description, in construction
// order: f_k(x) = k x_k - sum_{i<k} x_i for k <= n-1, f_n(x) = -sum x_i.
Int f_k(int n, int k, const IntVector& x) {
  Int acc = 0;
  if (k <= n - 1) {
    acc = Int(k) * x[k - 1];
    for (int i = 1; i < k; ++i) acc -= x[i - 1];
  } else {
    for (int i = 1; i <= n - 1; ++i) acc -= x[i - 1];
  }
  return acc;
}

}  // namespace

TEST_SUITE("families") {
  TEST_CASE("make_qn: small cases") {
    CHECK(make_qn(2).columns == std::vector<IntVector>{iv({1}), iv({-1})});
    CHECK(make_qn(3).columns ==
          std::vector<IntVector>{iv({1, 1}), iv({1, -2}), iv({-1, 0})});
    CHECK(make_qn(4).columns ==
          std::vector<IntVector>{iv({1, 1, 1}), iv({1, 1, -3}), iv({1, -2, 0}),
                                 iv({-1, 0, 0})});
    CHECK(make_qn(4).polytope.dim() == 3);
    CHECK_THROWS_AS(make_qn(1), InputError);
  }

  TEST_CASE("hrep_qn: closed form at n = 2, 3") {
    CHECK(hrep_qn(2).halfspaces ==
          std::vector<HalfSpace>{{iv({-1}), Int(1)}, {iv({1}), Int(1)}});
    CHECK(hrep_qn(3).halfspaces ==
          std::vector<HalfSpace>{{iv({-1, -1}), Int(1)},
                                 {iv({-1, 2}), Int(1)},
                                 {iv({1, 0}), Int(1)}});
  }

  TEST_CASE("hrep_qn equals simplex_hrep(make_qn) for n = 2..10") {
    for (int n = 2; n <= 10; ++n)
      CHECK(hrep_qn(n) == simplex_hrep(make_qn(n).polytope));
  }

  TEST_CASE("vertex-facet incidence matches the closed form") {
    // C_j is tight on every f_k with k != n-j and strictly inside f_{n-j}.
    for (int n = 2; n <= 10; ++n) {
      const auto fam = make_qn(n);
      for (int j = 0; j < n; ++j) {
        for (int k = 1; k <= n; ++k) {
          const Int value = f_k(n, k, fam.columns[j]);
          if (k != n - j) {
            CHECK(value == 1);
          } else {
            CHECK(value < 1);
            if (j != 0 && j != n - 1)
              CHECK(value == Int(-(n - j)) * Int(n - j) - Int(n - 1 - j));
          }
        }
      }
    }
  }

  TEST_CASE("make_rn: small cases") {
    CHECK(make_rn(2).columns ==
          std::vector<IntVector>{iv({0, 0}), iv({0, 2}), iv({1, 2})});
    CHECK(make_rn(3).columns ==
          std::vector<IntVector>{iv({0, 0, 0}), iv({0, 0, 3}), iv({0, 2, 3}),
                                 iv({1, 2, 3})});
    CHECK(make_rn(3).polytope.normalized_volume() == 6);
    CHECK_THROWS_AS(make_rn(1), InputError);
  }

  TEST_CASE("make_rn_tilde: small cases and shape") {
    CHECK(make_rn_tilde(2).columns == std::vector<IntVector>{iv({0}), iv({2})});
    CHECK(make_rn_tilde(3).columns ==
          std::vector<IntVector>{iv({0, 0}), iv({0, 3}), iv({2, 3})});
    for (int n = 2; n <= 10; ++n) {
      CHECK(make_rn_tilde(n).polytope.dim() == n - 1);
      CHECK(make_rn_tilde(n).polytope.vertex_count() == n);
    }
  }

  TEST_CASE("make_un") {
    CHECK(make_un(2) == IntMatrix({{Int(1)}}));
    CHECK(make_un(3) == IntMatrix({{Int(1), Int(1)}, {Int(0), Int(1)}}));
    for (int n = 2; n <= 12; ++n) CHECK(det(make_un(n)) == 1);
  }

  TEST_CASE("qn_to_rntilde: hand-checked images") {
    // n=2: {1,-1} - 1 = {0,-2}, partial sums unchanged, negated {0,2}.
    const auto m2 = qn_to_rntilde(2);
    CHECK(m2.apply(iv({1})) == iv({0}));
    CHECK(m2.apply(iv({-1})) == iv({2}));
    // n=3: columns map to (0,0), (0,3), (2,3).
    const auto m3 = qn_to_rntilde(3);
    CHECK(m3.apply(iv({1, 1})) == iv({0, 0}));
    CHECK(m3.apply(iv({1, -2})) == iv({0, 3}));
    CHECK(m3.apply(iv({-1, 0})) == iv({2, 3}));
  }

  TEST_CASE("qn_to_rntilde sends Q_n onto R~_n for n = 2..10") {
    for (int n = 2; n <= 10; ++n) {
      const auto m = qn_to_rntilde(n);
      CHECK(is_unimodular(m.u()));
      CHECK(make_qn(n).polytope.apply(m) == make_rn_tilde(n).polytope);
    }
  }

  TEST_CASE("pyramid over Q_n is equivalent to R_n for n = 2..5") {
    for (int n = 2; n <= 5; ++n) {
      const LatticePolytope pyr = make_qn(n).polytope.pyramid();
      const LatticePolytope rn = make_rn(n).polytope;
      const auto m = find_equivalence(pyr, rn);
      REQUIRE(m.has_value());
      CHECK(pyr.apply(*m) == rn);
    }
  }
}
