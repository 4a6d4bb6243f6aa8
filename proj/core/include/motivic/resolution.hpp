#pragma once

#include <string>
#include <utility>
#include <vector>

#include "motivic/grothendieck.hpp"
#include "motivic/report.hpp"
#include "motivic/trational.hpp"

namespace motivic {

/// One component of the divisor of f on a resolution: multiplicity m of f and
/// multiplicity n of the relative canonical divisor, both >= 1.
struct ResolutionComponent {
  std::string id;
  long m = 1;
  long n = 1;
};

/// Numerical data of a simple-normal-crossings model of (f, ambient space of
/// dimension d): labeled components with their two multiplicities, plus the
/// symbol bookkeeping they induce.
class ResolutionData {
 public:
  ResolutionData(long d, std::vector<ResolutionComponent> components);

  long dim() const { return d_; }
  const std::vector<ResolutionComponent>& components() const { return comps_; }
  const BasisContext& basis() const { return basis_; }

 private:
  long d_;
  std::vector<ResolutionComponent> comps_;
  BasisContext basis_;
};

/// Zeta function without the group action:
///   sum over all subsets I of  [E_I^o] * prod_{i in I} (L-1)/(T^-m_i L^n_i - 1),
/// the empty subset contributing the constant term [E_empty^o].
TRational naive_zeta(const ResolutionData& data);

/// Zeta function with the root-of-unity action on the covers:
///   sum over nonempty I of (L-1)^{|I|-1} [cover of E_I^o] * prod 1/(T^-m_i L^n_i - 1).
/// Zero components give the zero function.
TRational equivariant_zeta(const ResolutionData& data);

/// Limit value  -(equivariant zeta at T = infinity); also computed directly
/// as  sum over nonempty I of (1-L)^{|I|-1} [cover of E_I^o]  and the two
/// routes are asserted equal.
GrothClass nearby_fiber(const ResolutionData& data);

/// (L-1) * equivariant zeta + sum over nonempty J of (-1)^{|J|} [complete
/// cover of E_J], expressed in the complete basis.
TRational s_prime(const ResolutionData& data);

/// dual(nearby fiber) == L^{1-d} * nearby fiber, checked through the complete
/// basis and back.
CheckReport check_self_duality(const ResolutionData& data);

/// Functional equation of the naive zeta: rewrites it over the complete basis
/// as  sum_J [E_J] prod_{j in J} (L - T^-m_j L^n_j)/(T^-m_j L^n_j - 1),
/// checks that rewrite against the direct form, and verifies
///   dual_P(zeta) == L^-d * zeta.
CheckReport check_functional_naive(const ResolutionData& data);

/// Functional equation  dual_P(S') == L^-d * S'.
CheckReport check_functional_sprime(const ResolutionData& data);

/// The data of f^m: multiplicities m_i scaled by m, discrepancies unchanged.
ResolutionData power_transform(const ResolutionData& data, long m);

/// equivariant_zeta(power_transform(data, m)) == induction applied to
/// equivariant_zeta(data) with T -> T^m.
CheckReport check_power_rule(const ResolutionData& data, long m);

/// A smooth generator over the base together with the resolution data of the
/// composed function; pushing forward relabels its strata into the base
/// context by prefixing the generator label.
struct ResolvedGenerator {
  std::string label;
  ResolutionData data;
  std::string pushforward_base = "X0";

  StratumSymbol relabel(const StratumSymbol& g) const;
};

/// Laurent-coefficient combination of resolved generators.
using NearbyInput = std::vector<std::pair<LaurentPoly, ResolvedGenerator>>;

/// The nearby-cycle assignment on the span of resolved generators:
///   c * [Y]  ->  c * pushforward(nearby fiber of the composed function).
GrothClass apply_nearby_morphism(const NearbyInput& input);

/// dual(Psi(input)) == L * Psi(dual of input), where the dual of the input
/// rescales each generator by bar(c) * L^{-dim Y}.  Runs only on inputs whose
/// strata carry no extra group tags.
CheckReport check_morphism_duality(const NearbyInput& input);

/// Removes one group tag from every symbol and prefixes the base with the
/// quotient label; MissingTag when a symbol lacks the tag.
GrothClass quotient_relabel(const GrothClass& a, const std::string& h_tag);

}  // namespace motivic
