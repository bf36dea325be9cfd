#include <doctest.h>

#include "hstar/ehrhart.hpp"
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

LatticePolytope qn(int n) { return make_qn(n).polytope; }

LatticePolytope cross_polytope() {
  return LatticePolytope(2, {iv({1, 0}), iv({-1, 0}), iv({0, 1}), iv({0, -1})});
}

}  // namespace

TEST_SUITE("reflexive") {
  TEST_CASE("is_reflexive: Q_n for n = 2..8") {
    for (int n = 2; n <= 8; ++n) {
      const ReflexivityReport r = is_reflexive(qn(n));
      CHECK(r.reflexive());
      CHECK(r.origin_unique_interior);
      CHECK(r.facet_offsets_one);
    }
  }

  TEST_CASE("is_reflexive: dilation destroys reflexivity") {
    const ReflexivityReport r = is_reflexive(qn(2).dilate(2));
    CHECK_FALSE(r.reflexive());
    CHECK_FALSE(r.origin_unique_interior);  // interior points {-1, 0, 1}
    CHECK(qn(2).dilate(2).lattice_points(PointLocation::Interior) ==
          std::vector<IntVector>{iv({-1}), iv({0}), iv({1})});
  }

  TEST_CASE("is_reflexive: cross-polytope") {
    CHECK(is_reflexive(cross_polytope()).reflexive());
  }

  TEST_CASE("dual_polytope: Q_3 gives -Q_3") {
    const LatticePolytope dual = dual_polytope(qn(3));
    CHECK(dual == LatticePolytope(2, {iv({1, 0}), iv({-1, 2}), iv({-1, -1})}));
    const AffineUnimodularMap neg(IntMatrix::identity(2).negated(), iv({0, 0}));
    CHECK(dual == qn(3).apply(neg));
  }

  TEST_CASE("dual_polytope: cross-polytope and the square are dual") {
    const LatticePolytope square = dual_polytope(cross_polytope());
    CHECK(square ==
          LatticePolytope(2, {iv({1, 1}), iv({1, -1}), iv({-1, 1}), iv({-1, -1})}));
    CHECK(dual_polytope(square) == cross_polytope());
  }

  TEST_CASE("dual_polytope: biduality on Q_3") {
    CHECK(dual_polytope(dual_polytope(qn(3))) == qn(3));
  }

  TEST_CASE("dual_polytope: guards non-reflexive input") {
    CHECK_THROWS_AS(dual_polytope(qn(2).dilate(2)), CapabilityError);
  }

  TEST_CASE("dual of Q_n is the negation for n = 2..10") {
    for (int n = 2; n <= 10; ++n) {
      const AffineUnimodularMap neg(IntMatrix::identity(n - 1).negated(),
                                    IntVector(n - 1, Int(0)));
      CHECK(dual_polytope(qn(n)) == qn(n).apply(neg));
    }
  }

  TEST_CASE("find_equivalence: translation is recovered") {
    const LatticePolytope moved = qn(3).translate(iv({5, -7}));
    const auto m = find_equivalence(qn(3), moved);
    REQUIRE(m.has_value());
    CHECK(m->u() == IntMatrix::identity(2));
    CHECK(m->v() == iv({5, -7}));
  }

  TEST_CASE("find_equivalence: volume filter") {
    const LatticePolytope unit(2, {iv({0, 0}), iv({1, 0}), iv({0, 1})});
    CHECK_FALSE(find_equivalence(qn(3), unit).has_value());
  }

  TEST_CASE("find_equivalence: non-simplex input rejected") {
    CHECK_THROWS_AS(find_equivalence(cross_polytope(), cross_polytope()),
                    CapabilityError);
    CHECK_THROWS_AS(is_self_dual(cross_polytope()), CapabilityError);
  }

  TEST_CASE("find_equivalence: returned maps verify and invert") {
    for (int n = 2; n <= 5; ++n) {
      const LatticePolytope p = qn(n);
      const LatticePolytope dual = dual_polytope(p);
      const auto m = find_equivalence(p, dual);
      REQUIRE(m.has_value());
      CHECK(p.apply(*m) == dual);
      CHECK(dual.apply(m->inverse()) == p);
      CHECK(delta_vector(p) == delta_vector(dual));
    }
  }

  TEST_CASE("is_self_dual: Q_n for n = 2..6") {
    for (int n = 2; n <= 6; ++n) {
      const auto m = is_self_dual(qn(n));
      REQUIRE(m.has_value());
      CHECK(qn(n).apply(*m) == dual_polytope(qn(n)));
    }
  }

  TEST_CASE("is_self_dual: the volume-3 reflexive triangle is not self dual") {
    // conv{e1, e2, -e1-e2} is reflexive with volume 3, but its dual
    // conv{(1,1), (-2,1), (1,-2)} has volume 9, so no unimodular map can
    // exist; the search must report absent.
    const LatticePolytope t(2, {iv({1, 0}), iv({0, 1}), iv({-1, -1})});
    CHECK(is_reflexive(t).reflexive());
    CHECK(t.normalized_volume() == 3);
    const LatticePolytope dual = dual_polytope(t);
    CHECK(dual == LatticePolytope(2, {iv({1, 1}), iv({-2, 1}), iv({1, -2})}));
    CHECK(dual.normalized_volume() == 9);
    CHECK_FALSE(is_self_dual(t).has_value());
  }

  TEST_CASE("map composition and inverse stay unimodular") {
    const auto m = qn_to_rntilde(4);
    const auto id = m.then(m.inverse());
    CHECK(id.u() == IntMatrix::identity(3));
    CHECK(id.v() == IntVector(3, Int(0)));
  }
}
