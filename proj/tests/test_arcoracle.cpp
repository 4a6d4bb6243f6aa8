#include <array>
#include <vector>

#include "doctest.h"
#include "motivic/arc_oracle.hpp"
#include "motivic/errors.hpp"
#include "motivic/gf.hpp"

using namespace motivic;

TEST_CASE("finite field tables") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    CHECK(gf::Field::supported(q));
    const gf::Field f(q);
    CHECK(f.q() == q);
    // Every nonzero element has an inverse.
    for (int a = 1; a < q; ++a) {
      CHECK(f.mul(static_cast<std::uint8_t>(a), f.inverse(static_cast<std::uint8_t>(a))) == 1);
      CHECK(f.add(static_cast<std::uint8_t>(a), f.neg(static_cast<std::uint8_t>(a))) == 0);
    }
    // The embedding factors through the prime subfield.
    CHECK(f.embed(q + 1) == f.embed(1));
    CHECK(f.embed(-1) == f.neg(1));
  }
  CHECK_FALSE(gf::Field::supported(6));
  CHECK_THROWS_AS(gf::Field(6), InvalidInput);
  CHECK_THROWS_AS(gf::Field(11), InvalidInput);

  // Nontrivial products in the proper prime-power fields (digit encoding).
  CHECK(gf::Field(4).mul(2, 2) == 3);
  CHECK(gf::Field(8).mul(2, 4) == 3);
  CHECK(gf::Field(9).mul(3, 3) == 2);
  // Characteristic: 1 + 1 + 1 = 0 in F_9.
  const gf::Field f9(9);
  CHECK(f9.add(f9.add(1, 1), 1) == 0);
  CHECK(f9.pow(2, 8) == 1);  // the unit group has order q - 1
}

TEST_CASE("jet space sizes and brute counts") {
  CHECK(arc_space_size({3, 2, ArcMode::Ord, {2, {2, 1}}}) == Integer(729));
  CHECK(enumerate_arcs({3, 2, ArcMode::Ord, {1, {1}}}) == Integer(2));
  CHECK(enumerate_arcs({2, 0, ArcMode::Ord, {1, {1}}}) == Integer(1));
  CHECK(enumerate_arcs({3, 2, ArcMode::Monic, {2, {2, 1}}}) == Integer(72));
  // The split of the outer loop does not change the sum.
  const ArcCountTask task{3, 3, ArcMode::Monic, {2, {2, 1}}};
  CHECK(enumerate_arcs(task, 1) == enumerate_arcs(task, 2));
  CHECK_THROWS_AS(enumerate_arcs({3, 9, ArcMode::Ord, {2, {1, 1}}}),
                  BudgetExceeded);
  CHECK_THROWS_AS(enumerate_arcs({3, 0, ArcMode::Ord, {1, {}}}), InvalidInput);
  CHECK_THROWS_AS(enumerate_arcs({3, 0, ArcMode::Ord, {1, {1, 1}}}), InvalidInput);
}

TEST_CASE("model induced by a monomial") {
  const ResolutionData data = induced_resolution({3, {2, 5}});
  CHECK(data.dim() == 3);
  CHECK(data.components().size() == 2);
  CHECK(data.components()[0].m == 2);
  CHECK(data.components()[1].m == 5);
  CHECK(data.components()[0].n == 1);
  CHECK(data.components()[0].id == "E1");
}

TEST_CASE("stratum point counts over F_3") {
  const MonomialFunction f{2, {2, 1}};  // x^2 y
  const ResolutionData data = induced_resolution(f);
  const CountOracle oracle = strata_oracle(f, 3);
  const BasisContext& b = data.basis();
  CHECK(oracle(b.naive_open(0)) == Integer(4));      // x,y both nonzero
  CHECK(oracle(b.naive_open(0b01)) == Integer(2));   // x = 0, y nonzero
  CHECK(oracle(b.naive_open(0b10)) == Integer(2));
  CHECK(oracle(b.naive_open(0b11)) == Integer(1));   // the origin
  CHECK(oracle(b.naive_complete(0)) == Integer(9));  // the whole plane
  CHECK(oracle(b.naive_complete(0b01)) == Integer(3));
  // Covers: z^2 y = 1 has two points over y = 1 and none over y = 2.
  CHECK(oracle(b.equiv_open(0b01)) == Integer(2));
  CHECK(oracle(b.equiv_open(0b10)) == Integer(2));
  CHECK(oracle(b.equiv_open(0b11)) == Integer(1));
  CHECK(oracle(unit_symbol()) == Integer(1));
  CHECK_FALSE(oracle(StratumSymbol{"elsewhere", "Z"}).has_value());
  CHECK_THROWS_AS(strata_oracle({7, {1, 1, 1, 1, 1, 1, 1}}, 9), BudgetExceeded);
}

TEST_CASE("euler number of the nearby fiber of a power") {
  // Over F_q with q = 1 mod m, the m-th roots of unity are all rational and
  // the nearby fiber of x^m specializes to exactly m points.
  const std::vector<std::pair<long, int>> cases = {{1, 2}, {2, 3}, {3, 7}, {4, 5}};
  for (const auto& [m, q] : cases) {
    const MonomialFunction f{1, {m}};
    const GrothClass psi = nearby_fiber(induced_resolution(f));
    CHECK(specialize_count(psi, q, strata_oracle(f, q)) == Integer(m));
  }
}

TEST_CASE("series coefficients match brute counts") {
  const std::vector<CompareRow> rows = compare_zeta({2, {2, 3}}, {2, 3}, 4);
  CHECK(rows.size() == 18);  // per q: orders 0..4 plain and 1..4 monic
  for (const auto& row : rows) {
    CHECK_FALSE(row.skipped);
    CHECK(row.match());
  }
  // Orders past the per-coordinate table budget are reported as skipped,
  // not failed.
  const std::vector<CompareRow> big = compare_zeta({1, {1}}, {3}, 13);
  bool any_skipped = false;
  for (const auto& row : big) {
    CHECK(row.match());
    any_skipped = any_skipped || row.skipped;
  }
  CHECK(any_skipped);
}

TEST_CASE("the split and the twisted double cover can differ") {
  const std::array<long, 4> g = {0, -1, 0, 1};  // x^3 - x
  const TwistResult at7 = unit_twist_experiment(7, g);
  CHECK(at7.straight == Integer(8));
  CHECK(at7.twisted == Integer(4));
  CHECK_FALSE(at7.equal());
  const TwistResult at5 = unit_twist_experiment(5, g);
  CHECK(at5.straight == Integer(4));
  CHECK(at5.twisted == Integer(4));
  CHECK(at5.equal());
  CHECK_THROWS_AS(unit_twist_experiment(4, g), InvalidInput);
  CHECK_THROWS_AS(unit_twist_experiment(7, {0, 0, 0, 1}), InvalidInput);
  CHECK_THROWS_AS(unit_twist_experiment(7, {5, 0, 0, 0}), InvalidInput);
}
