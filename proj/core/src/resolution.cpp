#include "motivic/resolution.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "motivic/errors.hpp"

namespace motivic {

namespace {

using Mask = BasisContext::Mask;

std::vector<std::string> component_ids(const std::vector<ResolutionComponent>& comps) {
  std::vector<std::string> ids;
  ids.reserve(comps.size());
  for (const auto& c : comps) ids.push_back(c.id);
  return ids;
}

std::vector<long> component_mults(const std::vector<ResolutionComponent>& comps) {
  std::vector<long> m;
  m.reserve(comps.size());
  for (const auto& c : comps) m.push_back(c.m);
  return m;
}

std::vector<DenomFactor> subset_denominator(const ResolutionData& data, Mask mask) {
  std::vector<DenomFactor> denom;
  for (size_t i = 0; i < data.components().size(); ++i) {
    if (mask & (1u << i)) {
      denom.push_back({data.components()[i].m, data.components()[i].n});
    }
  }
  return denom;
}

void for_each_subset(const ResolutionData& data, bool include_empty,
                     const std::function<void(Mask)>& body) {
  const Mask full = data.basis().full_mask();
  for (Mask mask = 0;; ++mask) {
    if (mask != 0 || include_empty) body(mask);
    if (mask == full) break;
  }
}

}  // namespace

ResolutionData::ResolutionData(long d, std::vector<ResolutionComponent> components)
    : d_(d),
      comps_(std::move(components)),
      basis_(d, component_ids(comps_), component_mults(comps_)) {
  if (d_ < 1) throw InvalidInput("ambient dimension must be >= 1");
  for (const auto& c : comps_) {
    if (c.m < 1 || c.n < 1) throw InvalidInput("component multiplicities must be >= 1");
    if (c.id.empty()) throw InvalidInput("component ids must be nonempty");
  }
}

TRational naive_zeta(const ResolutionData& data) {
  TRational z;
  const LaurentPoly lm1 = LaurentPoly::L() - LaurentPoly(1);
  for_each_subset(data, true, [&](Mask mask) {
    const int size = std::popcount(mask);
    const GrothClass coeff =
        GrothClass::of(data.basis().naive_open(mask), lm1.pow(size));
    z += TRational::from_class(coeff, 0, subset_denominator(data, mask));
  });
  return z;
}

TRational equivariant_zeta(const ResolutionData& data) {
  TRational z;
  const LaurentPoly lm1 = LaurentPoly::L() - LaurentPoly(1);
  for_each_subset(data, false, [&](Mask mask) {
    const int size = std::popcount(mask);
    const GrothClass coeff =
        GrothClass::of(data.basis().equiv_open(mask), lm1.pow(size - 1));
    z += TRational::from_class(coeff, 0, subset_denominator(data, mask));
  });
  return z;
}

GrothClass nearby_fiber(const ResolutionData& data) {
  const GrothClass via_limit = -equivariant_zeta(data).eval_at_infinity();
  GrothClass direct;
  const LaurentPoly one_minus_l = LaurentPoly(1) - LaurentPoly::L();
  for_each_subset(data, false, [&](Mask mask) {
    const int size = std::popcount(mask);
    direct += GrothClass::of(data.basis().equiv_open(mask), one_minus_l.pow(size - 1));
  });
  if (!(via_limit == direct)) {
    throw Error("nearby fiber limit disagrees with its closed form");
  }
  return direct;
}

namespace {

TRational map_coeffs(const TRational& a,
                     const std::function<GrothClass(const GrothClass&)>& fn) {
  TRational out;
  for (const auto& [key, c] : a.terms()) {
    out += TRational::from_class(fn(c), key.second, key.first);
  }
  return out;
}

}  // namespace

TRational s_prime(const ResolutionData& data) {
  const TRational scaled =
      TRational::scalar(LaurentPoly::L() - LaurentPoly(1)) * equivariant_zeta(data);
  TRational sp = map_coeffs(
      scaled, [&](const GrothClass& c) { return data.basis().to_complete_basis(c); });
  GrothClass constant;
  for_each_subset(data, false, [&](Mask mask) {
    const int size = std::popcount(mask);
    constant += GrothClass::of(data.basis().equiv_complete(mask),
                               LaurentPoly(size % 2 == 0 ? 1 : -1));
  });
  sp += TRational::from_class(constant);
  return sp;
}

CheckReport check_self_duality(const ResolutionData& data) {
  const GrothClass psi = nearby_fiber(data);
  const GrothClass complete = data.basis().to_complete_basis(psi);
  const GrothClass dual_open = data.basis().to_open_basis(complete.dualized());
  const GrothClass expected = psi.scaled(LaurentPoly::L(1 - data.dim()));
  CheckReport rep;
  rep.identity = "selfdual";
  rep.lhs = dual_open.str();
  rep.rhs = expected.str();
  rep.pass = dual_open == expected;
  rep.note = "dual of the nearby fiber against L^{1-d} times itself";
  return rep;
}

CheckReport check_functional_naive(const ResolutionData& data) {
  // Complete-basis form: sum_J [E_J] prod_{j in J} (L - T^-m_j L^n_j)/(T^-m_j L^n_j - 1).
  TRational display;
  for_each_subset(data, true, [&](Mask mask) {
    TRational term = TRational::from_class(GrothClass::of(data.basis().naive_complete(mask)));
    for (size_t i = 0; i < data.components().size(); ++i) {
      if (!(mask & (1u << i))) continue;
      const DenomFactor f{data.components()[i].m, data.components()[i].n};
      TRational b = TRational::from_class(GrothClass::scalar(LaurentPoly::L()), 0, {f});
      b -= TRational::from_class(GrothClass::scalar(LaurentPoly::L(f.n)), -f.m, {f});
      term = term * b;
    }
    display += term;
  });
  CheckReport rep;
  rep.identity = "naive-feq";
  const TRational converted = map_coeffs(naive_zeta(data), [&](const GrothClass& c) {
    return data.basis().to_complete_basis(c);
  });
  if (!display.eq(converted)) {
    rep.pass = false;
    rep.lhs = display.str();
    rep.rhs = converted.str();
    rep.note = "complete-basis rewrite disagrees with the zeta function";
    return rep;
  }
  const TRational lhs = display.dualized_P();
  const TRational rhs = TRational::scalar(LaurentPoly::L(-data.dim())) * display;
  rep.pass = lhs.eq(rhs);
  rep.lhs = lhs.normalized().str();
  rep.rhs = rhs.normalized().str();
  rep.note = "dual_P of the zeta function against L^-d times it";
  return rep;
}

CheckReport check_functional_sprime(const ResolutionData& data) {
  const TRational sp = s_prime(data);
  const TRational lhs = sp.dualized_P();
  const TRational rhs = TRational::scalar(LaurentPoly::L(-data.dim())) * sp;
  CheckReport rep;
  rep.identity = "sprime-feq";
  rep.pass = lhs.eq(rhs);
  rep.lhs = lhs.normalized().str();
  rep.rhs = rhs.normalized().str();
  rep.note = "dual_P of S' against L^-d times it";
  return rep;
}

ResolutionData power_transform(const ResolutionData& data, long m) {
  if (m < 1) throw InvalidInput("power must be >= 1");
  std::vector<ResolutionComponent> comps = data.components();
  for (auto& c : comps) c.m *= m;
  return ResolutionData(data.dim(), std::move(comps));
}

CheckReport check_power_rule(const ResolutionData& data, long m) {
  const TRational lhs = equivariant_zeta(power_transform(data, m));
  const TRational rhs = map_coeffs(equivariant_zeta(data).substituted_T(m),
                                   [&](const GrothClass& c) { return c.induced(m); });
  CheckReport rep;
  rep.identity = "power:" + std::to_string(m);
  rep.pass = lhs.eq(rhs);
  rep.lhs = lhs.str();
  rep.rhs = rhs.str();
  rep.note = "zeta of f^m against induced substitution of the zeta of f";
  return rep;
}

StratumSymbol ResolvedGenerator::relabel(const StratumSymbol& g) const {
  StratumSymbol out = g;
  out.id = label + "." + g.id;
  out.base = pushforward_base;
  return out;
}

namespace {

GrothClass relabel_class(const ResolvedGenerator& gen, const GrothClass& a) {
  GrothClass out;
  for (const auto& [g, c] : a.terms()) out += GrothClass::of(gen.relabel(g), c);
  return out;
}

}  // namespace

GrothClass apply_nearby_morphism(const NearbyInput& input) {
  GrothClass out;
  for (const auto& [c, gen] : input) {
    out += relabel_class(gen, nearby_fiber(gen.data)).scaled(c);
  }
  return out;
}

CheckReport check_morphism_duality(const NearbyInput& input) {
  for (const auto& [c, gen] : input) {
    const GrothClass psi = nearby_fiber(gen.data);
    for (const auto& [g, cc] : psi.terms()) {
      if (!g.group_tags.empty()) {
        throw DualityUndefined("morphism duality runs only on tag-free inputs");
      }
    }
  }
  // Left side: duality commutes with proper pushforward, so dualize each
  // generator's nearby fiber through its own complete basis, then push.
  GrothClass lhs;
  for (const auto& [c, gen] : input) {
    const BasisContext& basis = gen.data.basis();
    const GrothClass psi = nearby_fiber(gen.data);
    const GrothClass dual_psi = basis.to_open_basis(basis.to_complete_basis(psi).dualized());
    lhs += relabel_class(gen, dual_psi).scaled(c.bar());
  }
  // Right side: L * Psi(dual of the input), the input dual rescaling each
  // generator by bar(c) * L^{-dim Y}.
  NearbyInput dual_input;
  for (const auto& [c, gen] : input) {
    dual_input.emplace_back(c.bar() * LaurentPoly::L(-gen.data.dim()), gen);
  }
  const GrothClass rhs = apply_nearby_morphism(dual_input).scaled(LaurentPoly::L());
  CheckReport rep;
  rep.identity = "morphism-duality";
  rep.pass = lhs == rhs;
  rep.lhs = lhs.str();
  rep.rhs = rhs.str();
  rep.note = "dual of the pushforward against L times the pushforward of the dual";
  return rep;
}

GrothClass quotient_relabel(const GrothClass& a, const std::string& h_tag) {
  GrothClass out;
  for (const auto& [g, c] : a.terms()) {
    auto it = std::find(g.group_tags.begin(), g.group_tags.end(), h_tag);
    if (it == g.group_tags.end()) {
      throw MissingTag("symbol " + g.render() + " lacks tag " + h_tag);
    }
    StratumSymbol h = g;
    h.group_tags.erase(h.group_tags.begin() + (it - g.group_tags.begin()));
    h.base = h_tag + "\\" + g.base;
    out += GrothClass::of(h, c);
  }
  return out;
}

}  // namespace motivic
