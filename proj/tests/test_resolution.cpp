#include <string>
#include <vector>

#include "doctest.h"
#include "motivic/errors.hpp"
#include "motivic/resolution.hpp"

using namespace motivic;

namespace {

/// f = x on a line: one component with both multiplicities equal to one.
ResolutionData line() { return ResolutionData(1, {{"E1", 1, 1}}); }

/// f = x^2 y^3 on the plane, crossing normally.
ResolutionData plane_23() {
  return ResolutionData(2, {{"E1", 2, 1}, {"E2", 3, 1}});
}

/// f = xy on the plane.
ResolutionData plane_11() {
  return ResolutionData(2, {{"E1", 1, 1}, {"E2", 1, 1}});
}

}  // namespace

TEST_CASE("construction rejects bad data") {
  CHECK_THROWS_AS(ResolutionData(0, {}), InvalidInput);
  CHECK_THROWS_AS(ResolutionData(2, {{"E1", 0, 1}}), InvalidInput);
  CHECK_THROWS_AS(ResolutionData(2, {{"E1", 1, 0}}), InvalidInput);
  CHECK_THROWS_AS(ResolutionData(2, {{"", 1, 1}}), InvalidInput);
  CHECK_THROWS_AS(ResolutionData(2, {{"E1", 1, 1}, {"E1", 2, 1}}), InvalidInput);
  std::vector<ResolutionComponent> many;
  for (int i = 0; i < 10; ++i) many.push_back({"E" + std::to_string(i), 1, 1});
  CHECK_THROWS_AS(ResolutionData(12, many), InvalidInput);
}

TEST_CASE("zeta functions of a single smooth component") {
  const ResolutionData data = line();
  CHECK(naive_zeta(data).str() ==
        "[E_empty_o] + (L-1)*[E_1_o]/((T^-1 L^1 - 1))");
  CHECK(equivariant_zeta(data).str() == "[Et_1_o]/((T^-1 L^1 - 1))");
  CHECK(nearby_fiber(data).str() == "[Et_1_o]");
  CHECK(s_prime(data).str() ==
        "-[Et_1] + (L-1)*[Et_1]/((T^-1 L^1 - 1))");
}

TEST_CASE("no components") {
  const ResolutionData data(2, {});
  CHECK(naive_zeta(data).str() == "[E_empty_o]");
  CHECK(equivariant_zeta(data).str() == "0");
  CHECK(nearby_fiber(data).str() == "0");
  CHECK(s_prime(data).str() == "0");
}

TEST_CASE("nearby fiber of a normal crossing of two lines") {
  const ResolutionData data = plane_11();
  const GrothClass psi = nearby_fiber(data);
  const GrothClass complete = data.basis().to_complete_basis(psi);
  const LaurentPoly L = LaurentPoly::L();
  CHECK(complete.coeff(data.basis().equiv_complete(0b01)) == LaurentPoly(1));
  CHECK(complete.coeff(data.basis().equiv_complete(0b10)) == LaurentPoly(1));
  CHECK(complete.coeff(data.basis().equiv_complete(0b11)) == -L - LaurentPoly(1));
  CHECK(complete.terms().size() == 3);
  // Round-trip back to the open family reproduces the nearby fiber.
  CHECK(data.basis().to_open_basis(complete) == psi);
}

TEST_CASE("multiplicity covers carry the action order") {
  const TRational z = equivariant_zeta(plane_23());
  const std::string s = z.str();
  CHECK(s.find("[Et_1_o@mu2]") != std::string::npos);
  CHECK(s.find("[Et_2_o@mu3]") != std::string::npos);
  CHECK(s.find("[Et_12_o]") != std::string::npos);  // gcd(2,3) = 1
}

TEST_CASE("duality and functional equations hold on samples") {
  for (const ResolutionData& data : {line(), plane_11(), plane_23(),
                                     ResolutionData(3, {{"A", 2, 3}, {"B", 1, 2}, {"C", 4, 1}})}) {
    CHECK(check_self_duality(data).pass);
    CHECK(check_functional_naive(data).pass);
    CHECK(check_functional_sprime(data).pass);
  }
  const CheckReport rep = check_self_duality(line());
  CHECK(rep.identity == "selfdual");
  CHECK(rep.lhs == rep.rhs);
}

TEST_CASE("powers of the function rescale the multiplicities") {
  const ResolutionData data = plane_23();
  const ResolutionData square = power_transform(data, 2);
  CHECK(square.components()[0].m == 4);
  CHECK(square.components()[1].m == 6);
  CHECK(square.components()[0].n == 1);
  for (long m = 1; m <= 4; ++m) {
    const CheckReport rep = check_power_rule(data, m);
    CHECK(rep.pass);
    CHECK(rep.identity == "power:" + std::to_string(m));
    CHECK(check_power_rule(line(), m).pass);
  }
}

TEST_CASE("pushforward relabeling") {
  const ResolvedGenerator gen{"g1", line(), "X0"};
  const StratumSymbol sym = gen.data.basis().equiv_open(0b1);
  const StratumSymbol moved = gen.relabel(sym);
  CHECK(moved.id == "g1.Et_1_o");
  CHECK(moved.base == "X0");
  CHECK(moved.mu_order == sym.mu_order);
}

TEST_CASE("nearby-cycle assignment on a combination of generators") {
  const NearbyInput input = {
      {LaurentPoly::L(), {"g1", line(), "X0"}},
      {LaurentPoly(1) - LaurentPoly::L(), {"g2", plane_11(), "X0"}}};
  const GrothClass out = apply_nearby_morphism(input);
  bool saw_g1 = false;
  for (const auto& [sym, c] : out.terms()) {
    CHECK(sym.base == "X0");
    if (sym.id == "g1.Et_1_o") {
      saw_g1 = true;
      CHECK(c == LaurentPoly::L());
    }
  }
  CHECK(saw_g1);
}

TEST_CASE("duality commutes with the assignment") {
  const NearbyInput one = {{LaurentPoly(1), {"g1", line(), "X0"}}};
  CHECK(check_morphism_duality(one).pass);
  const NearbyInput two = {
      {LaurentPoly::L(2) - LaurentPoly(3), {"g1", plane_11(), "X0"}},
      {LaurentPoly::L(-1), {"g2", ResolutionData(2, {{"E1", 2, 1}, {"E2", 1, 1}}), "X0"}}};
  const CheckReport rep = check_morphism_duality(two);
  CHECK(rep.pass);
  CHECK(rep.identity == "morphism-duality");
  // Symbols with extra group labels are out of scope for this check.
  const ResolutionData tagged_base = plane_23();
  NearbyInput tagged = {{LaurentPoly(1), {"g1", tagged_base, "X0"}}};
  (void)tagged;  // plane_23 carries only action orders, which are fine
  CHECK(check_morphism_duality(tagged).pass);
}

TEST_CASE("quotient by one group label") {
  StratumSymbol sym{"E_1_o", "Y", 3, false, 2, {"h1"}};
  const GrothClass a = GrothClass::of(sym, LaurentPoly::L());
  const GrothClass q = quotient_relabel(a, "h1");
  CHECK(q.terms().size() == 1);
  const StratumSymbol& moved = q.terms().begin()->first;
  CHECK(moved.group_tags.empty());
  CHECK(moved.base == "h1\\Y");
  CHECK(moved.render() == "[E_1_o@mu2]");
  CHECK(q.terms().begin()->second == LaurentPoly::L());
  CHECK_THROWS_AS(quotient_relabel(a, "h2"), MissingTag);
}
