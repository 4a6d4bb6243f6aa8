#include "motivic/grothendieck.hpp"

#include <bit>
#include <sstream>

#include "motivic/covers.hpp"
#include "motivic/errors.hpp"

namespace motivic {

std::string StratumSymbol::render() const {
  std::ostringstream out;
  out << "[" << id;
  if (mu_order > 1) out << "@mu" << mu_order;
  for (const auto& t : group_tags) out << ";" << t;
  out << "]";
  return out.str();
}

const StratumSymbol& unit_symbol() {
  static const StratumSymbol u{"1", "k", 0, true, 1, {}};
  return u;
}

GrothClass GrothClass::scalar(const LaurentPoly& c) { return of(unit_symbol(), c); }

GrothClass GrothClass::of(const StratumSymbol& g, const LaurentPoly& c) {
  GrothClass r;
  r.add_term(g, c);
  return r;
}

bool GrothClass::is_scalar() const {
  for (const auto& [g, c] : terms_) {
    if (!g.same_key(unit_symbol())) return false;
  }
  return true;
}

LaurentPoly GrothClass::scalar_part() const {
  if (!is_scalar()) throw InvalidInput("scalar_part on a non-scalar class");
  return coeff(unit_symbol());
}

LaurentPoly GrothClass::coeff(const StratumSymbol& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void GrothClass::add_term(const StratumSymbol& g, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(g);
  if (it == terms_.end()) {
    terms_.emplace(g, c);
    return;
  }
  const StratumSymbol& have = it->first;
  if (have.dim != g.dim || have.proper_smooth != g.proper_smooth) {
    throw SymbolClash("symbol " + g.render() + " carries inconsistent data");
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

GrothClass& GrothClass::operator+=(const GrothClass& o) {
  for (const auto& [g, c] : o.terms_) add_term(g, c);
  return *this;
}

GrothClass& GrothClass::operator-=(const GrothClass& o) {
  for (const auto& [g, c] : o.terms_) add_term(g, -c);
  return *this;
}

GrothClass GrothClass::operator-() const {
  GrothClass r;
  for (const auto& [g, c] : terms_) r.terms_.emplace(g, -c);
  return r;
}

GrothClass GrothClass::scaled(const LaurentPoly& c) const {
  GrothClass r;
  if (c.is_zero()) return r;
  for (const auto& [g, k] : terms_) {
    LaurentPoly p = k * c;
    if (!p.is_zero()) r.terms_.emplace(g, std::move(p));
  }
  return r;
}

GrothClass operator*(const GrothClass& a, const GrothClass& b) {
  if (a.is_scalar()) return b.scaled(a.coeff(unit_symbol()));
  if (b.is_scalar()) return a.scaled(b.coeff(unit_symbol()));
  throw InvalidInput("product of two non-scalar classes is not defined");
}

GrothClass GrothClass::bar_coeffs() const {
  GrothClass r;
  for (const auto& [g, c] : terms_) r.terms_.emplace(g, c.bar());
  return r;
}

GrothClass GrothClass::dualized() const {
  GrothClass r;
  for (const auto& [g, c] : terms_) {
    if (!g.duality_eligible()) {
      throw DualityUndefined("duality undefined on symbol " + g.render());
    }
    r.add_term(g, c.bar().shifted(-*g.dim));
  }
  return r;
}

GrothClass GrothClass::induced(long m) const {
  if (m < 1) throw InvalidInput("induction order must be >= 1");
  GrothClass r;
  for (const auto& [g, c] : terms_) {
    StratumSymbol h = g;
    h.mu_order = g.mu_order * m;
    r.add_term(h, c);
  }
  return r;
}

std::string GrothClass::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    if (g.same_key(unit_symbol())) {
      if (c.is_monomial()) {
        out << c.str_compact();
      } else {
        out << "(" << c.str_compact() << ")";
      }
      continue;
    }
    if (c.is_one()) {
      out << g.render();
    } else if ((-c).is_one()) {
      out << "-" << g.render();
    } else if (c.is_monomial()) {
      out << c.str_compact() << "*" << g.render();
    } else {
      out << "(" << c.str_compact() << ")*" << g.render();
    }
  }
  return out.str();
}

Integer specialize_count(const GrothClass& a, long q, const CountOracle& oracle) {
  if (q < 2) throw InvalidInput("specialization point must be >= 2");
  Rational acc = 0;
  for (const auto& [g, c] : a.terms()) {
    std::optional<Integer> n = oracle(g);
    if (!n) throw MissingCount("no count for symbol " + g.render());
    acc += c.eval(Rational(q)) * Rational(*n);
  }
  if (boost::multiprecision::denominator(acc) != 1) {
    throw NonIntegralSpecialization("specialization is not integral");
  }
  return boost::multiprecision::numerator(acc);
}

BasisContext::BasisContext(long d, std::vector<std::string> ids, std::vector<long> mult)
    : d_(d), ids_(std::move(ids)), mult_(std::move(mult)) {
  if (d_ < 0) throw InvalidInput("negative ambient dimension");
  if (ids_.size() != mult_.size()) throw InvalidInput("component ids/multiplicities mismatch");
  if (ids_.size() > 9) throw InvalidInput("at most 9 components are supported");
  for (long m : mult_) {
    if (m < 1) throw InvalidInput("multiplicities must be >= 1");
  }
  for (size_t i = 0; i < ids_.size(); ++i)
    for (size_t j = i + 1; j < ids_.size(); ++j) {
      if (ids_[i] == ids_[j]) throw InvalidInput("duplicate component id " + ids_[i]);
    }
  const Mask full = full_mask();
  for (Mask mask = 0;; ++mask) {
    lookup_.emplace(make(false, true, mask), SymbolInfo{false, true, mask});
    lookup_.emplace(make(false, false, mask), SymbolInfo{false, false, mask});
    if (mask != 0) {
      lookup_.emplace(make(true, true, mask), SymbolInfo{true, true, mask});
      lookup_.emplace(make(true, false, mask), SymbolInfo{true, false, mask});
    }
    if (mask == full) break;
  }
}

long BasisContext::m_I(Mask mask) const {
  std::vector<int> subset;
  for (int i = 0; i < count(); ++i) {
    if (mask & (1u << i)) subset.push_back(i);
  }
  return covers::gcd_cover_order(mult_, subset).m_I;
}

std::string BasisContext::subset_suffix(Mask mask) const {
  if (mask == 0) return "empty";
  std::string s;
  for (int i = 0; i < count(); ++i) {
    if (mask & (1u << i)) s += static_cast<char>('1' + i);
  }
  return s;
}

StratumSymbol BasisContext::make(bool equivariant, bool open, Mask mask) const {
  StratumSymbol g;
  g.id = (equivariant ? "Et_" : "E_") + subset_suffix(mask) + (open ? "_o" : "");
  g.base = equivariant ? "X0" : "X";
  g.dim = d_ - static_cast<long>(std::popcount(mask));
  g.proper_smooth = !open;
  g.mu_order = equivariant ? m_I(mask) : 1;
  return g;
}

StratumSymbol BasisContext::naive_open(Mask mask) const { return make(false, true, mask); }
StratumSymbol BasisContext::naive_complete(Mask mask) const { return make(false, false, mask); }

StratumSymbol BasisContext::equiv_open(Mask mask) const {
  if (mask == 0) throw EmptySubset("equivariant symbols need a nonempty subset");
  return make(true, true, mask);
}

StratumSymbol BasisContext::equiv_complete(Mask mask) const {
  if (mask == 0) throw EmptySubset("equivariant symbols need a nonempty subset");
  return make(true, false, mask);
}

std::optional<BasisContext::SymbolInfo> BasisContext::classify(const StratumSymbol& g) const {
  auto it = lookup_.find(g);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

GrothClass BasisContext::to_complete_basis(const GrothClass& a) const {
  GrothClass r;
  const Mask full = full_mask();
  for (const auto& [g, c] : a.terms()) {
    auto info = classify(g);
    if (!info || !info->open) {
      throw UnknownSymbol("not an open-family symbol of this context: " + g.render());
    }
    const Mask rest = full & ~info->mask;
    Mask sub = rest;
    while (true) {
      const Mask J = info->mask | sub;
      const int extra = std::popcount(sub);
      const LaurentPoly sign((extra % 2 == 0) ? 1 : -1);
      const StratumSymbol target =
          info->equivariant ? equiv_complete(J) : naive_complete(J);
      r += GrothClass::of(target, c * sign);
      if (sub == 0) break;
      sub = (sub - 1) & rest;
    }
  }
  return r;
}

GrothClass BasisContext::to_open_basis(const GrothClass& a) const {
  GrothClass r;
  const Mask full = full_mask();
  for (const auto& [g, c] : a.terms()) {
    auto info = classify(g);
    if (!info || info->open) {
      throw UnknownSymbol("not a complete-family symbol of this context: " + g.render());
    }
    const Mask rest = full & ~info->mask;
    Mask sub = rest;
    while (true) {
      const Mask J = info->mask | sub;
      const StratumSymbol target = info->equivariant ? equiv_open(J) : naive_open(J);
      r += GrothClass::of(target, c);
      if (sub == 0) break;
      sub = (sub - 1) & rest;
    }
  }
  return r;
}

}  // namespace motivic
