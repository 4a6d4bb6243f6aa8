#pragma once

#include <map>
#include <string>

#include "motivic/numeric.hpp"

namespace motivic {

/// Exact Laurent polynomial in one variable with Integer coefficients.  The
/// variable is written L in renderings (t for the combinatorial polynomials,
/// which share the representation).  Zero coefficients are never stored, so
/// structural equality is canonical equality.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c) { if (c != 0) terms_[0] = c; }
  explicit LaurentPoly(Integer c) { if (c != 0) terms_[0] = std::move(c); }

  /// c * L^e
  static LaurentPoly monomial(Integer c, long e);
  /// L^e
  static LaurentPoly L(long e = 1) { return monomial(1, e); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// True when the polynomial is c * L^e for a single (c, e).
  bool is_monomial() const { return terms_.size() == 1; }

  const std::map<long, Integer>& terms() const { return terms_; }
  long min_exp() const;  // pre: !is_zero()
  long max_exp() const;  // pre: !is_zero()
  Integer coeff(long e) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  /// The involution L -> L^-1 (coefficient-wise exponent negation).
  LaurentPoly bar() const;
  /// Multiplication by L^k.
  LaurentPoly shifted(long k) const;
  LaurentPoly pow(unsigned long e) const;

  /// Exact evaluation at a rational value of the variable.  pre: x != 0 when
  /// negative exponents are present.
  Rational eval(const Rational& x) const;

  /// Canonical rendering, descending exponents: "L^2 - 3*L + 1 + 2*L^-1".
  std::string str(const std::string& var = "L") const;
  /// Space-free form used inside class renderings: "L^2-3*L+1+2*L^-1".
  std::string str_compact(const std::string& var = "L") const;

 private:
  // exponent -> nonzero coefficient
  std::map<long, Integer> terms_;
  void prune(long e);
};

}  // namespace motivic
