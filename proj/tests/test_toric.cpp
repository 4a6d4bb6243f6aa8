#include <vector>

#include "doctest.h"
#include "motivic/errors.hpp"
#include "motivic/intmat.hpp"
#include "motivic/toric.hpp"

using namespace motivic;

namespace {

LaurentPoly t(long e = 1) { return LaurentPoly::L(e); }

/// Midpoint subdivision of the segment: vertices e0, e1 and the midpoint.
Triangulation midpoint_segment() {
  return Triangulation(1, {{1, 0}, {0, 1}, {Rational(1, 2), Rational(1, 2)}},
                       {{0, 2}, {1, 2}});
}

bool g_palindromic(const Triangulation& tri, const Triangulation::Face& tau) {
  const LaurentPoly g = tri.g_poly(tau);
  const int dim_tau = static_cast<int>(tau.size()) - 1;
  return g.bar() == g.shifted(dim_tau - tri.ambient_n());
}

bool h_palindromic(const Triangulation& tri) {
  const LaurentPoly h = tri.h_poly();
  return h.bar() == h.shifted(-(tri.ambient_n() + 1));
}

}  // namespace

TEST_CASE("standard simplex") {
  const Triangulation tri = Triangulation::standard(2);
  CHECK(tri.ambient_n() == 2);
  CHECK(tri.vertices().size() == 3);
  CHECK(tri.faces().size() == 7);  // 2^3 - 1
  CHECK(tri.maximal_faces() == std::vector<Triangulation::Face>{{0, 1, 2}});
  CHECK(tri.support(1) == std::vector<int>{1});
  CHECK(tri.carrier_dim({0, 1}) == 1);
  CHECK(tri.carrier_dim({0, 1, 2}) == 2);
  tri.validate(1);
}

TEST_CASE("triangulation validation rejects bad data") {
  // Coordinates must be nonnegative and sum to one.
  CHECK_THROWS_AS(Triangulation(1, {{1, 0}, {Rational(1, 2), 0}}, {{0, 1}}),
                  InvalidInput);
  CHECK_THROWS_AS(Triangulation(1, {{1, 0}, {2, -1}}, {{0, 1}}), InvalidInput);
  // Overlapping maximal faces fail the seeded volume/location probe.
  const Triangulation bad(1, {{1, 0}, {0, 1}, {Rational(1, 2), Rational(1, 2)}},
                          {{0, 1}, {0, 2}});
  CHECK_THROWS_AS(bad.validate(7), Error);
}

TEST_CASE("local polynomial of the reference simplex") {
  // Only the top face supports a nonzero local polynomial: (-1)^n.
  for (int n = 1; n <= 3; ++n) {
    const Triangulation tri = Triangulation::standard(n);
    for (const auto& tau : tri.faces()) {
      const LaurentPoly g = tri.g_poly(tau);
      if (static_cast<int>(tau.size()) == n + 1) {
        CHECK(g == LaurentPoly(n % 2 == 0 ? 1 : -1));
      } else {
        CHECK(g.is_zero());
      }
      CHECK(g_palindromic(tri, tau));
    }
    CHECK(tri.h_poly().is_zero());
  }
}

TEST_CASE("midpoint subdivision of the segment") {
  const Triangulation tri = midpoint_segment();
  tri.validate(42);
  CHECK(tri.support(2) == std::vector<int>{0, 1});
  CHECK(tri.g_poly({2}) == -t() - LaurentPoly(1));
  CHECK(tri.h_poly() == -t());
  CHECK(h_palindromic(tri));
  for (const auto& tau : tri.faces()) CHECK(g_palindromic(tri, tau));
}

TEST_CASE("stellar subdivision") {
  const Triangulation tri = Triangulation::standard(1).stellar_subdivided({0, 1});
  CHECK(tri.vertices().size() == 3);
  CHECK(tri.vertices()[2] == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK(tri.maximal_faces().size() == 2);
  CHECK(tri.h_poly() == midpoint_segment().h_poly());
  tri.validate(3);

  CHECK_THROWS_AS(Triangulation::standard(2).stellar_subdivided({0}), NotASimplex);
  CHECK_THROWS_AS(Triangulation::standard(1).stellar_subdivided({0, 2}), NotASimplex);
}

TEST_CASE("iterated subdivisions keep both palindromies") {
  for (int n = 1; n <= 2; ++n) {
    Triangulation tri = Triangulation::standard(n);
    for (int step = 0; step < 6; ++step) {
      std::vector<Triangulation::Face> eligible;
      for (const auto& f : tri.faces()) {
        if (f.size() >= 2) eligible.push_back(f);
      }
      tri = tri.stellar_subdivided(eligible[(3 * step) % eligible.size()]);
      CHECK(h_palindromic(tri));
      for (const auto& tau : tri.faces()) CHECK(g_palindromic(tri, tau));
    }
    tri.validate(99);
  }
}

TEST_CASE("face vectors and their symmetry transform") {
  // Boundary of the octahedron.
  CHECK(dehn_sommerville(FaceVector{{6, 12, 8}}) ==
        std::vector<Integer>{1, 3, 3, 1});
  // Boundary of the triangle.
  CHECK(dehn_sommerville(FaceVector{{3, 3}}) == std::vector<Integer>{1, 1, 1});
  // Boundary of the 4-dimensional cross-polytope.
  CHECK(dehn_sommerville(FaceVector{{8, 24, 32, 16}}) ==
        std::vector<Integer>{1, 4, 6, 4, 1});
  // Three isolated points are not a sphere.
  CHECK(dehn_sommerville(FaceVector{{3}}) == std::vector<Integer>{2, 1});

  CHECK(is_palindromic({1, 3, 3, 1}));
  CHECK_FALSE(is_palindromic({2, 1}));
  CHECK(is_palindromic({5}));
  CHECK(is_palindromic({}));
}

TEST_CASE("boundary families") {
  CHECK(simplex_boundary(2).f == std::vector<Integer>{3, 3});
  CHECK(simplex_boundary(3).f == std::vector<Integer>{4, 6, 4});
  CHECK(cross_polytope(3).f == std::vector<Integer>{6, 12, 8});
  CHECK(cross_polytope(4).f == std::vector<Integer>{8, 24, 32, 16});
  for (int m = 1; m <= 5; ++m) {
    CHECK(is_palindromic(dehn_sommerville(simplex_boundary(m))));
    if (m <= 4) CHECK(is_palindromic(dehn_sommerville(cross_polytope(m))));
  }
}

TEST_CASE("binomial identity") {
  for (int n = 0; n <= 20; ++n) CHECK(verify_aux_binomial(n));
}

TEST_CASE("fan construction and validation") {
  const SimplicialFan fan(2, {{1, 0}, {1, 2}}, {{0, 1}});
  CHECK(fan.dim() == 2);
  CHECK(fan.cones().size() == 4);  // zero cone, two rays, one 2-cone
  CHECK(fan.cones()[0].empty());
  CHECK(fan.cone_rays({0, 1}) ==
        std::vector<std::vector<Integer>>{{1, 0}, {1, 2}});
  fan.validate_pairwise(5);

  CHECK_THROWS_AS(SimplicialFan(2, {{2, 0}}, {{0}}), InvalidInput);  // imprimitive
  CHECK_THROWS_AS(SimplicialFan(2, {{0, 0}}, {{0}}), InvalidInput);
  CHECK_THROWS_AS(SimplicialFan(2, {{1, 0}, {1, 0}}, {{0, 1}}), InvalidInput);
  CHECK_THROWS_AS(SimplicialFan(2, {{1, 0}, {0, 1}, {1, 1}}, {{0, 1, 2}}),
                  InvalidInput);  // dependent rays in one cone
  // Overlapping cones are caught by the seeded interior-point probe.
  const SimplicialFan overlap(2, {{1, 0}, {0, 1}, {1, 1}}, {{0, 1}, {0, 2}});
  CHECK_THROWS_AS(overlap.validate_pairwise(11), Error);
}

TEST_CASE("orbit sum of a fan") {
  const SimplicialFan fan(2, {{1, 0}, {1, 2}}, {{0, 1}});
  const GrothClass cls = toric_class(fan, 0);
  const LaurentPoly lm1 = t() - LaurentPoly(1);
  CHECK(cls.coeff(StratumSymbol{"O_empty", "Y"}) == lm1 * lm1);
  CHECK(cls.coeff(StratumSymbol{"O_0", "Y"}) == lm1);
  CHECK(cls.coeff(StratumSymbol{"O_1", "Y"}) == lm1);
  CHECK(cls.coeff(StratumSymbol{"O_0_1", "Y"}) == LaurentPoly(1));
  CHECK(cls.terms().size() == 4);
  // Dimensions drop with the cone and shift with the offset.
  for (const auto& [sym, c] : cls.terms()) {
    if (sym.id == "O_empty") CHECK(sym.dim == 2);
    if (sym.id == "O_0_1") CHECK(sym.dim == 0);
    CHECK_FALSE(sym.proper_smooth);
  }
  const GrothClass shifted = toric_class(fan, 3);
  for (const auto& [sym, c] : shifted.terms()) {
    if (sym.id == "O_empty") CHECK(sym.dim == 5);
  }
}

TEST_CASE("refinement polynomials of the A1 cone") {
  const std::vector<std::vector<Integer>> rays = {{1, 0}, {1, 2}};
  const SimplicialFan cone(2, rays, {{0, 1}});
  const SimplicialFan refined = stellar_refine(cone);
  CHECK(refined.rays() ==
        std::vector<std::vector<Integer>>{{1, 0}, {1, 2}, {1, 1}});
  const ConeRefinement ref{rays, refined};
  CHECK(p_poly(ref, {}) == LaurentPoly(1));
  CHECK(p_poly(ref, {0}).is_zero());
  CHECK(p_poly(ref, {1}).is_zero());
  CHECK(p_poly(ref, {0, 1}) == t());
  // Palindromy p(1/t) = t^-|tau| p(t) for every face.
  CHECK(p_poly(ref, {0, 1}).bar() == p_poly(ref, {0, 1}).shifted(-2));
}

TEST_CASE("identity refinement has trivial polynomials") {
  const std::vector<std::vector<Integer>> rays = {{1, 0}, {0, 1}};
  const SimplicialFan same(2, rays, {{0, 1}});
  const ConeRefinement ref{rays, same};
  CHECK(p_poly(ref, {}) == LaurentPoly(1));
  CHECK(p_poly(ref, {0}).is_zero());
  CHECK(p_poly(ref, {0, 1}).is_zero());
}

TEST_CASE("spanned faces and refinement membership") {
  const std::vector<std::vector<Integer>> rays = {{1, 0}, {1, 2}};
  const SimplicialFan refined = stellar_refine(SimplicialFan(2, rays, {{0, 1}}));
  const ConeRefinement ref{rays, refined};
  CHECK(spanned_face(ref, {}) == std::vector<int>{});
  CHECK(spanned_face(ref, {0}) == std::vector<int>{0});
  CHECK(spanned_face(ref, {2}) == std::vector<int>{0, 1});  // interior ray
  CHECK(spanned_face(ref, {0, 2}) == std::vector<int>{0, 1});
  // A ray outside the original cone is rejected.
  const SimplicialFan outside(2, {{1, 0}, {-1, 1}}, {{0, 1}});
  const ConeRefinement bad{rays, outside};
  CHECK_THROWS_AS(p_poly(bad, {0, 1}), NotARefinement);
}

TEST_CASE("stellar refinement reaches determinant one") {
  const SimplicialFan cone(2, {{1, 0}, {1, 3}}, {{0, 1}});
  const SimplicialFan refined = stellar_refine(cone);
  CHECK(refined.rays() ==
        std::vector<std::vector<Integer>>{{1, 0}, {1, 3}, {1, 1}, {1, 2}});
  for (const auto& c : refined.maximal_cones()) {
    const Integer d = intmat::det(refined.cone_rays(c));
    CHECK((d == 1 || d == -1));
  }
  refined.validate_pairwise(17);
  // Refining an already unimodular fan changes nothing.
  const SimplicialFan flat(2, {{1, 0}, {0, 1}}, {{0, 1}});
  CHECK(stellar_refine(flat).rays() == flat.rays());
}

TEST_CASE("extra subdivision inserts the ray sum") {
  const SimplicialFan cone(2, {{1, 0}, {1, 2}}, {{0, 1}});
  const SimplicialFan once = stellar_refine(cone);
  const SimplicialFan twice = extra_subdivision(once);
  CHECK(twice.rays().size() == 4);
  CHECK(twice.rays()[3] == std::vector<Integer>{2, 3});
  twice.validate_pairwise(23);
}

TEST_CASE("toric duality verdicts") {
  const CheckReport a1 = check_toric_duality(SimplicialFan(2, {{1, 0}, {1, 2}}, {{0, 1}}));
  CHECK(a1.pass);
  CHECK(a1.identity == "toric-duality");
  CHECK(a1.lhs == a1.rhs);
  CHECK(a1.note == "cones=1 palindromies=8");

  // Two maximal cones, one singular and one smooth.
  const CheckReport two = check_toric_duality(
      SimplicialFan(2, {{0, 1}, {1, 0}, {1, 2}}, {{0, 2}, {1, 2}}));
  CHECK(two.pass);
  CHECK(two.note == "cones=2 palindromies=16");

  CHECK_THROWS_AS(check_toric_duality(SimplicialFan(
                      5,
                      {{1, 0, 0, 0, 0},
                       {0, 1, 0, 0, 0},
                       {0, 0, 1, 0, 0},
                       {0, 0, 0, 1, 0},
                       {1, 1, 1, 1, 2}},
                      {{0, 1, 2, 3, 4}})),
                  RankTooLarge);
}
