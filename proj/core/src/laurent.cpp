#include "motivic/laurent.hpp"

#include <sstream>

#include "motivic/errors.hpp"

namespace motivic {

LaurentPoly LaurentPoly::monomial(Integer c, long e) {
  LaurentPoly p;
  if (c != 0) p.terms_[e] = std::move(c);
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

long LaurentPoly::min_exp() const { return terms_.begin()->first; }
long LaurentPoly::max_exp() const { return terms_.rbegin()->first; }

Integer LaurentPoly::coeff(long e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::prune(long e) {
  auto it = terms_.find(e);
  if (it != terms_.end() && it->second == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    terms_[e] += c;
    prune(e);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) {
    terms_[e] -= c;
    prune(e);
  }
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e] = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      r.terms_[ea + eb] += ca * cb;
    }
  for (auto it = r.terms_.begin(); it != r.terms_.end();) {
    it = it->second == 0 ? r.terms_.erase(it) : std::next(it);
  }
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[-e] = c;
  return r;
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned long e) const {
  LaurentPoly r(1);
  LaurentPoly base = *this;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

Rational LaurentPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    if (e >= 0) {
      Rational p = 1;
      for (long i = 0; i < e; ++i) p *= x;
      acc += Rational(c) * p;
    } else {
      if (x == 0) throw InvalidInput("evaluation at 0 with negative exponents");
      Rational p = 1;
      for (long i = 0; i < -e; ++i) p *= x;
      acc += Rational(c) / p;
    }
  }
  return acc;
}

namespace {

void render_term(std::ostringstream& out, bool first, bool spaced, const Integer& c,
                 long e, const std::string& var) {
  Integer a = c;
  if (first) {
    if (a < 0) {
      out << "-";
      a = -a;
    }
  } else {
    if (a < 0) {
      out << (spaced ? " - " : "-");
      a = -a;
    } else {
      out << (spaced ? " + " : "+");
    }
  }
  const bool unit = (a == 1);
  if (e == 0) {
    out << a;
    return;
  }
  if (!unit) out << a << "*";
  out << var;
  if (e != 1) out << "^" << e;
}

std::string render(const std::map<long, Integer>& terms, bool spaced, const std::string& var) {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    render_term(out, first, spaced, it->second, it->first, var);
    first = false;
  }
  return out.str();
}

}  // namespace

std::string LaurentPoly::str(const std::string& var) const { return render(terms_, true, var); }

std::string LaurentPoly::str_compact(const std::string& var) const {
  return render(terms_, false, var);
}

}  // namespace motivic
