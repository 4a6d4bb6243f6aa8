#include "doctest.h"
#include "motivic/errors.hpp"
#include "motivic/grothendieck.hpp"

using namespace motivic;

namespace {

LaurentPoly L(long e = 1) { return LaurentPoly::L(e); }

StratumSymbol eligible(const std::string& id, long dim) {
  StratumSymbol s{id, "X"};
  s.dim = dim;
  s.proper_smooth = true;
  return s;
}

}  // namespace

TEST_CASE("symbol rendering") {
  StratumSymbol s{"E_1_o", "X"};
  CHECK(s.render() == "[E_1_o]");
  s.mu_order = 2;
  CHECK(s.render() == "[E_1_o@mu2]");
  s.group_tags = {"h1"};
  CHECK(s.render() == "[E_1_o@mu2;h1]");
  CHECK(unit_symbol().render() == "[1]");
}

TEST_CASE("symbol identity ignores geometry flags") {
  StratumSymbol a{"E", "X"};
  StratumSymbol b{"E", "X"};
  b.dim = 3;
  b.proper_smooth = true;
  CHECK(a.same_key(b));
  CHECK_FALSE(a == b);
  b.mu_order = 2;
  CHECK_FALSE(a.same_key(b));
}

TEST_CASE("class arithmetic") {
  const StratumSymbol g{"A", "X"};
  const StratumSymbol h{"B", "X"};
  GrothClass a = GrothClass::of(g) + GrothClass::of(g);
  CHECK(a == GrothClass::of(g, LaurentPoly(2)));
  CHECK(a.coeff(g) == LaurentPoly(2));
  CHECK(a.coeff(h).is_zero());
  a -= GrothClass::of(g, LaurentPoly(2));
  CHECK(a.is_zero());

  const GrothClass b = GrothClass::of(g) + GrothClass::of(h, L());
  CHECK(b.scaled(L()) == GrothClass::of(g, L()) + GrothClass::of(h, L(2)));
  CHECK(-b + b == GrothClass());
  CHECK(b * GrothClass::scalar(L()) == b.scaled(L()));
  CHECK(GrothClass::scalar(L()) * b == b.scaled(L()));
}

TEST_CASE("scalar part") {
  CHECK(GrothClass::scalar(L(2)).is_scalar());
  CHECK(GrothClass::scalar(L(2)).scalar_part() == L(2));
  CHECK(GrothClass().is_scalar());
  CHECK_FALSE(GrothClass::of(StratumSymbol{"A", "X"}).is_scalar());
  // The unit symbol is the scalar 1.
  CHECK(GrothClass::of(unit_symbol()).is_scalar());
  CHECK(GrothClass::of(unit_symbol()).scalar_part() == LaurentPoly(1));
}

TEST_CASE("coefficient involution") {
  const StratumSymbol g{"A", "X"};
  const GrothClass a = GrothClass::of(g, L() - LaurentPoly(1));
  CHECK(a.bar_coeffs() == GrothClass::of(g, L(-1) - LaurentPoly(1)));
  CHECK(a.bar_coeffs().bar_coeffs() == a);
}

TEST_CASE("duality on proper smooth symbols") {
  const StratumSymbol g = eligible("Y", 3);
  const GrothClass a = GrothClass::of(g, L() - LaurentPoly(1));
  CHECK(a.dualized() == GrothClass::of(g, (L(-1) - LaurentPoly(1)) * L(-3)));
  CHECK(a.dualized().dualized() == a);
  CHECK_THROWS_AS(GrothClass::of(StratumSymbol{"A", "X"}).dualized(), DualityUndefined);
  StratumSymbol no_dim{"B", "X"};
  no_dim.proper_smooth = true;
  CHECK_THROWS_AS(GrothClass::of(no_dim).dualized(), DualityUndefined);
}

TEST_CASE("induction scales the action order") {
  StratumSymbol g{"A", "X"};
  g.mu_order = 2;
  const GrothClass a = GrothClass::of(g, L());
  StratumSymbol expect = g;
  expect.mu_order = 6;
  CHECK(a.induced(3) == GrothClass::of(expect, L()));
  CHECK(a.induced(1) == a);
}

TEST_CASE("point-count specialization") {
  const StratumSymbol g{"A", "X"};
  const CountOracle oracle = [&](const StratumSymbol& s) -> std::optional<Integer> {
    if (s.id == "A") return Integer(5);
    if (s.same_key(unit_symbol())) return Integer(1);  // scalars count once
    return std::nullopt;
  };
  const GrothClass a = GrothClass::of(g, L() - LaurentPoly(1)) + GrothClass::scalar(L(2));
  CHECK(specialize_count(a, 3, oracle) == (3 - 1) * 5 + 9);
  CHECK(specialize_count(GrothClass(), 3, oracle) == 0);
  CHECK_THROWS_AS(specialize_count(GrothClass::of(StratumSymbol{"B", "X"}), 3, oracle),
                  MissingCount);
  // 1/q is not an integer count.
  CHECK_THROWS_AS(specialize_count(GrothClass::scalar(L(-1)), 3, oracle),
                  NonIntegralSpecialization);
}

TEST_CASE("basis context symbols") {
  const BasisContext b(2, {"E1", "E2"}, {2, 3});
  CHECK(b.dim() == 2);
  CHECK(b.count() == 2);
  CHECK(b.full_mask() == 3u);
  CHECK(b.m_I(1) == 2);
  CHECK(b.m_I(2) == 3);
  CHECK(b.m_I(3) == 1);

  CHECK(b.naive_open(0).render() == "[E_empty_o]");
  CHECK(b.naive_complete(0).render() == "[E_empty]");
  CHECK(b.naive_open(1).render() == "[E_1_o]");
  CHECK(b.naive_complete(3).render() == "[E_12]");
  CHECK(b.equiv_open(1).render() == "[Et_1_o@mu2]");
  CHECK(b.equiv_complete(3).render() == "[Et_12]");

  // Complete symbols are the duality-eligible ones; open symbols are not.
  CHECK(b.naive_complete(1).proper_smooth);
  CHECK(b.naive_complete(1).dim == 1);
  CHECK_FALSE(b.naive_open(1).proper_smooth);
  CHECK(b.naive_complete(0).dim == 2);
  CHECK(b.naive_complete(3).dim == 0);
}

TEST_CASE("basis context classification") {
  const BasisContext b(2, {"E1", "E2"}, {2, 3});
  const auto info = b.classify(b.equiv_open(1));
  REQUIRE(info.has_value());
  CHECK(info->equivariant);
  CHECK(info->open);
  CHECK(info->mask == 1u);
  const auto info2 = b.classify(b.naive_complete(3));
  REQUIRE(info2.has_value());
  CHECK_FALSE(info2->equivariant);
  CHECK_FALSE(info2->open);
  CHECK(info2->mask == 3u);
  CHECK_FALSE(b.classify(StratumSymbol{"Z", "X"}).has_value());
}

TEST_CASE("open and complete basis conversion") {
  const BasisContext b(2, {"E1", "E2"}, {2, 3});
  // The open part of E_1 removes the double intersection.
  CHECK(b.to_complete_basis(GrothClass::of(b.naive_open(1))) ==
        GrothClass::of(b.naive_complete(1)) - GrothClass::of(b.naive_complete(3)));
  // Scalars live outside the two stratum families.
  CHECK_THROWS_AS(b.to_complete_basis(GrothClass::scalar(L())), UnknownSymbol);

  // Round trips on a mixed class, both directions.
  const GrothClass mixed = GrothClass::of(b.naive_open(0), L()) +
                           GrothClass::of(b.equiv_open(3), L(-2) - LaurentPoly(7));
  CHECK(b.to_open_basis(b.to_complete_basis(mixed)) == mixed);
  const GrothClass mixed2 = GrothClass::of(b.equiv_complete(1), L(5)) +
                            GrothClass::of(b.naive_complete(2));
  CHECK(b.to_complete_basis(b.to_open_basis(mixed2)) == mixed2);
}
