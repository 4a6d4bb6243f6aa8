#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "motivic/grothendieck.hpp"

namespace motivic {

/// One factor T^-m L^n - 1 of the distinguished denominator family.
/// Invariant: m >= 1, n >= 1.
struct DenomFactor {
  long m = 1;
  long n = 1;
  auto operator<=>(const DenomFactor&) const = default;
  std::string str() const;  // "(T^-m L^n - 1)"
};

/// Finite sum of terms  coeff * T^e / prod of denominator factors, with
/// GrothClass coefficients.  Terms with equal (denominator multiset, T-power)
/// are merged; no cross-term cancellation is forced outside normalized().
class TRational {
 public:
  TRational() = default;

  static TRational from_class(const GrothClass& c, long t_exp = 0,
                              std::vector<DenomFactor> denom = {});
  static TRational scalar(const LaurentPoly& c) { return from_class(GrothClass::scalar(c)); }

  bool has_no_terms() const { return terms_.empty(); }

  TRational& operator+=(const TRational& o);
  TRational& operator-=(const TRational& o);
  TRational operator-() const;
  friend TRational operator+(TRational a, const TRational& b) { return a += b; }
  friend TRational operator-(TRational a, const TRational& b) { return a -= b; }
  /// Distributive product; coefficient products need one scalar side.
  friend TRational operator*(const TRational& a, const TRational& b);

  /// Single-fraction form over the least common denominator, with every
  /// denominator factor that divides the numerator exactly cancelled.
  /// Idempotent; the zero function comes back with no terms.
  TRational normalized() const;

  /// Semantic equality through cross-multiplication.
  bool eq(const TRational& o) const;
  bool is_zero() const { return normalized().has_no_terms(); }

  /// The involution L -> L^-1, T -> T^-1.  Denominator factors stay in the
  /// family through  1/(T^m L^-n - 1) = -L^n T^-m / (T^-m L^n - 1); symbol
  /// coefficients dualize, so they must be duality-eligible.
  TRational dualized_P() const;

  /// Substitution T -> T^m.  pre: m >= 1
  TRational substituted_T(long m) const;

  /// Value at T = infinity.  Rewrites positive T-powers through
  ///   T^e/(T^-m L^n - 1) = -T^e + L^n T^{e-m}/(T^-m L^n - 1)
  /// until every denominator-carrying term has e <= 0, then evaluates
  /// (bounded terms vanish, each factor contributes -1 at e = 0).  A residual
  /// positive polynomial part raises NotRegularAtInfinity.
  GrothClass eval_at_infinity() const;

  /// Coefficient of T^n in the power-series expansion via
  ///   1/(T^-m L^n - 1) = sum_{s>=1} T^{ms} L^{-ns}.
  /// NotExpandable when the expansion has nonzero negative-order terms.
  GrothClass series_coefficient(long n) const;

  /// Canonical rendering: terms ordered by (denominator, T-power), e.g.
  /// "(L-1)*[E_1_o]/((T^-1 L^1 - 1))".
  std::string str() const;

  using Key = std::pair<std::vector<DenomFactor>, long>;
  const std::map<Key, GrothClass>& terms() const { return terms_; }

 private:
  std::map<Key, GrothClass> terms_;
  void add_term(std::vector<DenomFactor> denom, long t_exp, const GrothClass& c);
};

}  // namespace motivic
