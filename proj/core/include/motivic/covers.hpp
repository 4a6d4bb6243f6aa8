#pragma once

#include <string>
#include <vector>

#include "motivic/intmat.hpp"
#include "motivic/numeric.hpp"

namespace motivic::covers {

/// A cyclic cover datum: degree d and the exponent vector p of the monomial
/// being covered, one entry per coordinate.
struct CoverSpec {
  long d = 1;
  std::vector<long> p;
};

/// Full-rank sublattice-or-overlattice of Q^k, stored as denominator s plus
/// the row-HNF integer matrix of the s-scaled generators.  The pair is
/// content-reduced, so structural equality is lattice equality.
class LatticeModel {
 public:
  LatticeModel(long denom, intmat::Matrix scaled_rows);
  static LatticeModel standard(int k);

  int rank() const { return static_cast<int>(rows_.size()); }
  long denom() const { return denom_; }
  const intmat::Matrix& rows() const { return rows_; }

  bool operator==(const LatticeModel& o) const = default;

  /// Membership of a rational vector.
  bool contains(const std::vector<Rational>& v) const;

  /// Index [M : Z^k] as an exact rational (> 1 for proper overlattices).
  Rational index_over_standard() const;

  /// One row per line: "[1/2 1/2]" style, HNF order.
  std::string str() const;

 private:
  long denom_;
  intmat::Matrix rows_;
};

/// The lattice Z^k + Z * (p_1/d, .., p_k/d) attached to a cover spec.
LatticeModel lattice_of_cover(const CoverSpec& spec);

/// The sublattice of vectors with vanishing coordinate `axis` (1-based),
/// re-embedded in Q^{k-1} by dropping that coordinate.
LatticeModel restrict_lattice(const LatticeModel& m, int axis);

struct ComponentDecomposition {
  long c;  // gcd(p_1, .., p_k, d): number of connected pieces
  long e;  // d / c: degree of each piece
  CoverSpec reduced;
};
ComponentDecomposition component_decomposition(const CoverSpec& spec);

struct CoverOrder {
  long m_I;                  // gcd of the multiplicities over the subset
  std::vector<long> alpha;   // m_i / m_I for i in the subset, in subset order
  long c_I;                  // sum of the multiplicities over the subset
};
/// pre: I nonempty (EmptySubset), entries index into m.
CoverOrder gcd_cover_order(const std::vector<long>& m, const std::vector<int>& I);

/// Completes a coprime integer row vector to a square matrix with determinant
/// +-1 whose first row is the given vector.  NotCoprime when gcd != 1.
intmat::Matrix unimodular_completion(const std::vector<Integer>& alpha);

/// Minimal generating set of the monoid M intersected with the nonnegative
/// orthant, by bounded enumeration.  RankTooLarge for rank > 3.
std::vector<std::vector<Rational>> hilbert_basis(const LatticeModel& m);

struct RestrictionAction {
  long d_prime;   // gcd(d, p_axis): degree of the restricted cover
  long exponent;  // d / d_prime: power the deck transformation acts through
};
RestrictionAction restriction_action(const CoverSpec& spec, int axis);

}  // namespace motivic::covers
