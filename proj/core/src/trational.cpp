#include "motivic/trational.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "motivic/errors.hpp"

namespace motivic {

std::string DenomFactor::str() const {
  std::ostringstream out;
  out << "(T^-" << m << " L^" << n << " - 1)";
  return out.str();
}

void TRational::add_term(std::vector<DenomFactor> denom, long t_exp, const GrothClass& c) {
  if (c.is_zero()) return;
  for (const auto& f : denom) {
    if (f.m < 1 || f.n < 1) throw InvalidInput("denominator factor needs m, n >= 1");
  }
  std::sort(denom.begin(), denom.end());
  Key key{std::move(denom), t_exp};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TRational TRational::from_class(const GrothClass& c, long t_exp, std::vector<DenomFactor> denom) {
  TRational r;
  r.add_term(std::move(denom), t_exp, c);
  return r;
}

TRational& TRational::operator+=(const TRational& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

TRational& TRational::operator-=(const TRational& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
  return *this;
}

TRational TRational::operator-() const {
  TRational r;
  for (const auto& [key, c] : terms_) r.terms_.emplace(key, -c);
  return r;
}

TRational operator*(const TRational& a, const TRational& b) {
  TRational r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) {
      std::vector<DenomFactor> denom = ka.first;
      denom.insert(denom.end(), kb.first.begin(), kb.first.end());
      r.add_term(std::move(denom), ka.second + kb.second, ca * cb);
    }
  return r;
}

namespace {

// Laurent polynomial in T with GrothClass coefficients: T-exponent -> class.
using NumPoly = std::map<long, GrothClass>;

void num_add(NumPoly& n, long e, const GrothClass& c) {
  auto it = n.find(e);
  if (it == n.end()) {
    if (!c.is_zero()) n.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) n.erase(it);
}

// Multiplies the numerator by (T^-m L^n - 1).
NumPoly num_mul_factor(const NumPoly& n, const DenomFactor& f) {
  NumPoly out;
  for (const auto& [e, c] : n) {
    num_add(out, e - f.m, c.scaled(LaurentPoly::L(f.n)));
    num_add(out, e, -c);
  }
  return out;
}

// Exact division of the numerator by (T^-m L^n - 1); nullopt when inexact.
// With N_e = L^n Q_{e+m} - Q_e the quotient builds bottom-up and the top m
// computed coefficients must vanish.
std::optional<NumPoly> num_divide_factor(const NumPoly& n, const DenomFactor& f) {
  if (n.empty()) return NumPoly{};
  const long lo = n.begin()->first, hi = n.rbegin()->first;
  NumPoly q;
  const LaurentPoly l_inv = LaurentPoly::L(-f.n);
  for (long e = lo; e <= hi; ++e) {
    GrothClass acc;
    auto qn = q.find(e);
    if (qn != q.end()) acc += qn->second;
    auto nn = n.find(e);
    if (nn != n.end()) acc += nn->second;
    if (!acc.is_zero()) q.emplace(e + f.m, acc.scaled(l_inv));
  }
  for (long e = hi + 1; e <= hi + f.m; ++e) {
    if (q.count(e)) return std::nullopt;
  }
  return q;
}

}  // namespace

TRational TRational::normalized() const {
  if (terms_.empty()) return {};
  // Least common denominator: per-factor maximum multiplicity.
  std::map<DenomFactor, int> common;
  for (const auto& [key, c] : terms_) {
    std::map<DenomFactor, int> mult;
    for (const auto& f : key.first) ++mult[f];
    for (const auto& [f, k] : mult) common[f] = std::max(common[f], k);
  }
  NumPoly num;
  for (const auto& [key, c] : terms_) {
    std::map<DenomFactor, int> mult;
    for (const auto& f : key.first) ++mult[f];
    NumPoly part{{key.second, c}};
    for (const auto& [f, k] : common) {
      const int have = mult.count(f) ? mult[f] : 0;
      for (int i = have; i < k; ++i) part = num_mul_factor(part, f);
    }
    for (const auto& [e, cc] : part) num_add(num, e, cc);
  }
  // Cancel factors dividing the numerator exactly, smallest factor first.
  bool progress = true;
  while (progress && !num.empty()) {
    progress = false;
    for (auto& [f, k] : common) {
      while (k > 0) {
        auto q = num_divide_factor(num, f);
        if (!q) break;
        num = std::move(*q);
        --k;
        progress = true;
      }
    }
  }
  TRational out;
  if (num.empty()) return out;
  std::vector<DenomFactor> denom;
  for (const auto& [f, k] : common)
    for (int i = 0; i < k; ++i) denom.push_back(f);
  for (const auto& [e, c] : num) out.add_term(denom, e, c);
  return out;
}

bool TRational::eq(const TRational& o) const { return (*this - o).normalized().has_no_terms(); }

TRational TRational::dualized_P() const {
  TRational r;
  for (const auto& [key, c] : terms_) {
    GrothClass cc = c.dualized();
    long e = -key.second;
    for (const auto& f : key.first) {
      cc = cc.scaled(LaurentPoly::monomial(-1, f.n));
      e -= f.m;
    }
    r.add_term(key.first, e, cc);
  }
  return r;
}

TRational TRational::substituted_T(long m) const {
  if (m < 1) throw InvalidInput("substitution order must be >= 1");
  TRational r;
  for (const auto& [key, c] : terms_) {
    std::vector<DenomFactor> denom = key.first;
    for (auto& f : denom) f.m *= m;
    r.add_term(std::move(denom), key.second * m, c);
  }
  return r;
}

GrothClass TRational::eval_at_infinity() const {
  NumPoly poly_part;
  GrothClass value;
  struct Item {
    GrothClass c;
    long e;
    std::vector<DenomFactor> denom;
  };
  std::vector<Item> work;
  for (const auto& [key, c] : terms_) work.push_back({c, key.second, key.first});
  while (!work.empty()) {
    Item it = std::move(work.back());
    work.pop_back();
    if (it.denom.empty()) {
      num_add(poly_part, it.e, it.c);
      continue;
    }
    if (it.e <= 0) {
      if (it.e == 0) {
        const int sign = it.denom.size() % 2 == 0 ? 1 : -1;
        value += it.c.scaled(LaurentPoly(sign));
      }
      continue;  // e < 0: vanishes at infinity
    }
    const DenomFactor f = it.denom.front();
    std::vector<DenomFactor> rest(it.denom.begin() + 1, it.denom.end());
    work.push_back({-it.c, it.e, std::move(rest)});
    work.push_back({it.c.scaled(LaurentPoly::L(f.n)), it.e - f.m, std::move(it.denom)});
  }
  for (const auto& [e, c] : poly_part) {
    if (e > 0) throw NotRegularAtInfinity("pole at infinity: residual T^" + std::to_string(e));
  }
  auto at_zero = poly_part.find(0);
  if (at_zero != poly_part.end()) value += at_zero->second;
  return value;
}

namespace {

// Sum over s_j >= 1 with sum m_j s_j = target of prod L^{-n_j s_j}, applied
// to the coefficient.
void expand_factors(const std::vector<DenomFactor>& denom, size_t idx, long target,
                    const LaurentPoly& scale, const GrothClass& c, GrothClass& out) {
  if (idx == denom.size()) {
    if (target == 0) out += c.scaled(scale);
    return;
  }
  const DenomFactor& f = denom[idx];
  long remaining_min = 0;
  for (size_t j = idx + 1; j < denom.size(); ++j) remaining_min += denom[j].m;
  for (long s = 1; f.m * s <= target - remaining_min; ++s) {
    expand_factors(denom, idx + 1, target - f.m * s, scale * LaurentPoly::L(-f.n * s), c, out);
  }
}

}  // namespace

GrothClass TRational::series_coefficient(long n) const {
  // Negative-order part must vanish for the expansion to be a power series.
  long min_start = 0;
  for (const auto& [key, c] : terms_) {
    long start = key.second;
    for (const auto& f : key.first) start += f.m;
    min_start = std::min(min_start, start);
  }
  for (long k = min_start; k < 0; ++k) {
    GrothClass neg;
    for (const auto& [key, c] : terms_) {
      expand_factors(key.first, 0, k - key.second, LaurentPoly(1), c, neg);
    }
    if (!neg.is_zero()) {
      throw NotExpandable("nonzero coefficient at T^" + std::to_string(k));
    }
  }
  if (n < 0) return {};
  GrothClass out;
  for (const auto& [key, c] : terms_) {
    expand_factors(key.first, 0, n - key.second, LaurentPoly(1), c, out);
  }
  return out;
}

std::string TRational::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    const bool single = c.terms().size() == 1;
    if (single) {
      out << c.str();
    } else {
      out << "(" << c.str() << ")";
    }
    if (key.second != 0) out << "*T^" << key.second;
    if (!key.first.empty()) {
      out << "/(";
      for (const auto& f : key.first) out << f.str();
      out << ")";
    }
  }
  return out.str();
}

}  // namespace motivic
