#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "motivic/laurent.hpp"

namespace motivic {

/// Opaque name for the class of a stratum (or any variety-over-a-base).  Two
/// symbols denote the same generator exactly when id, base, mu_order and
/// group_tags agree; dimension and the proper+smooth flag are carried data and
/// must then agree as well, otherwise the input is inconsistent.
struct StratumSymbol {
  std::string id;
  std::string base;
  std::optional<long> dim;
  bool proper_smooth = false;
  /// Order of the root-of-unity action the symbol carries (1 = trivial).
  long mu_order = 1;
  /// Optional extra finite-group labels, kept sorted.
  std::vector<std::string> group_tags;

  bool same_key(const StratumSymbol& o) const {
    return id == o.id && base == o.base && mu_order == o.mu_order && group_tags == o.group_tags;
  }

  bool operator==(const StratumSymbol& o) const = default;

  /// Strict weak order on the identity key (id, base, mu_order, group_tags).
  struct KeyLess {
    bool operator()(const StratumSymbol& a, const StratumSymbol& b) const {
      if (a.id != b.id) return a.id < b.id;
      if (a.base != b.base) return a.base < b.base;
      if (a.mu_order != b.mu_order) return a.mu_order < b.mu_order;
      return a.group_tags < b.group_tags;
    }
  };

  bool duality_eligible() const { return proper_smooth && dim.has_value(); }

  /// "[id]", with "@mu<n>" appended when the action order exceeds 1 and
  /// ";tag" for each group tag.
  std::string render() const;
};

/// The distinguished unit generator: scalars are classes supported on it.
const StratumSymbol& unit_symbol();

/// Finite Laurent-coefficient combination of stratum symbols: an element of
/// the free module over Z[L, L^-1] on the symbols in play.  Immutable value
/// semantics; all operations return new values.
class GrothClass {
 public:
  GrothClass() = default;

  static GrothClass scalar(const LaurentPoly& c);
  static GrothClass of(const StratumSymbol& g, const LaurentPoly& c = LaurentPoly(1));

  bool is_zero() const { return terms_.empty(); }
  /// True when every term sits on the unit symbol (or the class is zero).
  bool is_scalar() const;
  /// pre: is_scalar()
  LaurentPoly scalar_part() const;

  const std::map<StratumSymbol, LaurentPoly, StratumSymbol::KeyLess>& terms() const {
    return terms_;
  }
  LaurentPoly coeff(const StratumSymbol& g) const;

  GrothClass& operator+=(const GrothClass& o);
  GrothClass& operator-=(const GrothClass& o);
  GrothClass operator-() const;
  friend GrothClass operator+(GrothClass a, const GrothClass& b) { return a += b; }
  friend GrothClass operator-(GrothClass a, const GrothClass& b) { return a -= b; }
  bool operator==(const GrothClass& o) const { return terms_ == o.terms_; }

  /// Module scaling by a Laurent polynomial.
  GrothClass scaled(const LaurentPoly& c) const;
  /// Product, defined when at least one operand is scalar.
  friend GrothClass operator*(const GrothClass& a, const GrothClass& b);

  /// Coefficient-wise L -> L^-1 (no action on symbols).
  GrothClass bar_coeffs() const;

  /// Duality: c * [g]  ->  bar(c) * L^{-dim g} * [g] termwise.  Every symbol
  /// must be proper+smooth with known dimension, else DualityUndefined.
  GrothClass dualized() const;

  /// Induction along mu_{mn} -> mu_n: multiplies every symbol's action order
  /// by m, coefficients unchanged.  pre: m >= 1
  GrothClass induced(long m) const;

  std::string str() const;

 private:
  std::map<StratumSymbol, LaurentPoly, StratumSymbol::KeyLess> terms_;
  // Adds c on g, checking carried data against an existing entry with the
  // same key (SymbolClash on mismatch) and pruning zeros.
  void add_term(const StratumSymbol& g, const LaurentPoly& c);
};

/// Oracle giving point counts (or Euler numbers) per symbol; nullopt = unknown.
using CountOracle = std::function<std::optional<Integer>(const StratumSymbol&)>;

/// Evaluates every coefficient at L = q and pairs it with the oracle's count
/// for the symbol.  The result must be an integer (NonIntegralSpecialization
/// otherwise); unknown symbols raise MissingCount.  pre: q >= 2
Integer specialize_count(const GrothClass& a, long q, const CountOracle& oracle);

/// The component/subset bookkeeping shared by the zeta and duality routines:
/// for a divisor with labeled components E_1..E_c on a d-dimensional ambient
/// space it hands out the four symbol families
///   naive_open(I)    = class of E_I minus the deeper strata      (E_I^o)
///   naive_complete(I)= class of the closed stratum E_I
///   equiv_open(I)    = class of the cover of E_I^o, action order m_I
///   equiv_complete(I)= class of the completed cover of E_I
/// with dim = d - |I|, proper+smooth on the complete families only, and
/// converts between the open and complete bases.
class BasisContext {
 public:
  using Mask = unsigned;

  BasisContext(long d, std::vector<std::string> ids, std::vector<long> mult);

  long dim() const { return d_; }
  int count() const { return static_cast<int>(ids_.size()); }
  Mask full_mask() const { return (1u << ids_.size()) - 1u; }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::vector<long>& multiplicities() const { return mult_; }

  /// gcd of the multiplicities over the subset; pre: mask != 0
  long m_I(Mask mask) const;

  StratumSymbol naive_open(Mask mask) const;
  StratumSymbol naive_complete(Mask mask) const;
  StratumSymbol equiv_open(Mask mask) const;      // pre: mask != 0
  StratumSymbol equiv_complete(Mask mask) const;  // pre: mask != 0

  struct SymbolInfo {
    bool equivariant;
    bool open;
    Mask mask;
  };
  /// Identifies a symbol produced by this context; nullopt for foreign ones.
  std::optional<SymbolInfo> classify(const StratumSymbol& g) const;

  /// Rewrites a class given on the open families through the inclusion-
  /// exclusion  [open I] = sum over J >= I of (-1)^{|J|-|I|} [complete J].
  /// Every symbol must be an open symbol of this context (UnknownSymbol).
  GrothClass to_complete_basis(const GrothClass& a) const;
  /// Inverse rewrite: [complete I] = sum over J >= I of [open J].
  GrothClass to_open_basis(const GrothClass& a) const;

 private:
  long d_;
  std::vector<std::string> ids_;
  std::vector<long> mult_;
  std::map<StratumSymbol, SymbolInfo, StratumSymbol::KeyLess> lookup_;

  std::string subset_suffix(Mask mask) const;
  StratumSymbol make(bool equivariant, bool open, Mask mask) const;
};

}  // namespace motivic
