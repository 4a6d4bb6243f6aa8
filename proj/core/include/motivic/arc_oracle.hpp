#pragma once

#include <array>
#include <vector>

#include "motivic/gf.hpp"
#include "motivic/grothendieck.hpp"
#include "motivic/numeric.hpp"
#include "motivic/resolution.hpp"

namespace motivic {

/// The monomial x_1^{a_1} .. x_k^{a_k} on affine d-space; coordinates past
/// the k-th do not occur in it.
struct MonomialFunction {
  long d = 1;
  std::vector<long> exps;  // k entries, each >= 1, k <= d
};

/// Which jet condition is counted: Ord fixes the vanishing order of the
/// monomial along the jet, Monic additionally pins the leading coefficient
/// to 1.
enum class ArcMode { Ord, Monic };

struct ArcCountTask {
  int q = 3;
  long n = 0;
  ArcMode mode = ArcMode::Ord;
  MonomialFunction f;
};

/// Number of coordinate jet tuples the task ranges over: q^{d(n+1)}.
Integer arc_space_size(const ArcCountTask& t);

/// Brute-force jet count over F_q: tuples of univariate (n+1)-jets, one per
/// coordinate, whose monomial product has vanishing order exactly n (Ord
/// mode) or equals t^n up to order n (Monic mode).  BudgetExceeded when
/// q^{d(n+1)} > 10^9 or a per-coordinate jet table would not fit in memory.
/// threads <= 0 uses the hardware count; the outer range is split and the
/// partial sums are combined in order.
Integer enumerate_arcs(const ArcCountTask& t, int threads = 0);

/// The model a monomial carries on its own coordinate space: one component
/// per occurring variable, multiplicity = exponent, discrepancy 1.
ResolutionData induced_resolution(const MonomialFunction& f);

/// Point-count oracle over F_q for every stratum symbol of
/// induced_resolution(f), obtained by enumerating F_q^k — and, for the
/// covers, the defining equation z^{m_I} prod_{j not in I} x_j^{m_j} = 1 —
/// rather than by any closed formula.  BudgetExceeded when q^{d+1} > 10^7.
CountOracle strata_oracle(const MonomialFunction& f, int q);

struct CompareRow {
  int q = 0;
  long n = 0;
  ArcMode mode = ArcMode::Ord;
  bool skipped = false;  // brute count infeasible within budget
  Integer series = 0;    // q^{nd} * (zeta series coefficient at L = q)
  Integer arcs = 0;      // enumerate_arcs
  bool match() const { return skipped || series == arcs; }
};

/// Zeta-versus-jets comparison for every q and every order n: Ord mode
/// against the plain zeta function (n = 0..n_max), Monic mode against the
/// equivariant one (n = 1..n_max).  Budget-exceeded rows are marked skipped.
std::vector<CompareRow> compare_zeta(const MonomialFunction& f,
                                     const std::vector<int>& qs, long n_max);

struct TwistResult {
  int q = 0;
  Integer straight = 0;  // 2 * #U(F_q)
  Integer twisted = 0;   // #{(t, x) : x in U, t^2 = g(x)}
  bool equal() const { return straight == twisted; }
};

/// For U the complement of the zero set of a squarefree cubic g: compares
/// the split double cover U x {+-1} with the cover t^2 = g(x) pointwise over
/// F_q.  The two counts can differ even though both covers are two-to-one.
/// pre: q odd, g squarefree over F_q and of degree >= 1, U nonempty.
TwistResult unit_twist_experiment(int q, const std::array<long, 4>& cubic);

}  // namespace motivic
