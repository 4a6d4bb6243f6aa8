#include "motivic/covers.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "motivic/errors.hpp"

namespace motivic::covers {

namespace {

void validate_spec(const CoverSpec& spec) {
  if (spec.d < 1) throw InvalidInput("cover degree must be >= 1");
  for (long pi : spec.p) {
    if (pi < 0) throw InvalidInput("cover exponents must be >= 0");
  }
}

Integer content(const intmat::Matrix& rows, long denom) {
  Integer g = denom;
  for (const auto& row : rows)
    for (const auto& x : row) g = boost::multiprecision::gcd(g, x);
  return g;
}

}  // namespace

LatticeModel::LatticeModel(long denom, intmat::Matrix scaled_rows) : denom_(denom) {
  if (denom_ < 1) throw InvalidInput("lattice denominator must be >= 1");
  rows_ = intmat::hnf(std::move(scaled_rows));
  if (!rows_.empty() && rows_.size() != rows_[0].size()) {
    throw InvalidInput("lattice must have full rank");
  }
  Integer g = content(rows_, denom_);
  if (g > 1) {
    denom_ = static_cast<long>(denom_ / g);
    for (auto& row : rows_)
      for (auto& x : row) x /= g;
  }
}

LatticeModel LatticeModel::standard(int k) {
  intmat::Matrix id(k, std::vector<Integer>(k, 0));
  for (int i = 0; i < k; ++i) id[i][i] = 1;
  return LatticeModel(1, std::move(id));
}

bool LatticeModel::contains(const std::vector<Rational>& v) const {
  if (v.size() != rows_.size()) throw InvalidInput("dimension mismatch");
  std::vector<Integer> scaled(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    Rational s = v[i] * denom_;
    if (boost::multiprecision::denominator(s) != 1) return false;
    scaled[i] = boost::multiprecision::numerator(s);
  }
  return intmat::solve_in_hnf(rows_, scaled).has_value();
}

Rational LatticeModel::index_over_standard() const {
  Integer d = intmat::det(rows_);
  if (d < 0) d = -d;
  return Rational(int_pow(Integer(denom_), rows_.size()), d);
}

std::string LatticeModel::str() const {
  std::ostringstream out;
  for (size_t i = 0; i < rows_.size(); ++i) {
    out << "[";
    for (size_t j = 0; j < rows_[i].size(); ++j) {
      if (j) out << " ";
      Rational x(rows_[i][j], denom_);
      out << x;
    }
    out << "]";
    if (i + 1 < rows_.size()) out << "\n";
  }
  return out.str();
}

LatticeModel lattice_of_cover(const CoverSpec& spec) {
  validate_spec(spec);
  const size_t k = spec.p.size();
  if (k == 0) throw InvalidInput("cover needs at least one coordinate");
  intmat::Matrix rows;
  for (size_t i = 0; i < k; ++i) {
    std::vector<Integer> e(k, 0);
    e[i] = spec.d;
    rows.push_back(std::move(e));
  }
  std::vector<Integer> v(k);
  for (size_t i = 0; i < k; ++i) v[i] = spec.p[i];
  rows.push_back(std::move(v));
  return LatticeModel(spec.d, std::move(rows));
}

LatticeModel restrict_lattice(const LatticeModel& m, int axis) {
  const int k = m.rank();
  if (axis < 1 || axis > k) throw InvalidInput("axis out of range");
  if (k < 2) throw InvalidInput("restriction needs rank >= 2");
  const size_t ax = static_cast<size_t>(axis - 1);
  std::vector<Integer> column(k);
  for (int i = 0; i < k; ++i) column[i] = m.rows()[i][ax];
  intmat::Matrix kernel = intmat::kernel_of_form(column);
  intmat::Matrix rows;
  for (const auto& c : kernel) {
    std::vector<Integer> row;
    row.reserve(k - 1);
    for (size_t j = 0; j < static_cast<size_t>(k); ++j) {
      if (j == ax) continue;
      Integer acc = 0;
      for (int i = 0; i < k; ++i) acc += c[i] * m.rows()[i][j];
      row.push_back(acc);
    }
    rows.push_back(std::move(row));
  }
  return LatticeModel(m.denom(), std::move(rows));
}

ComponentDecomposition component_decomposition(const CoverSpec& spec) {
  validate_spec(spec);
  long c = spec.d;
  for (long pi : spec.p) c = gcd_positive(c, pi);
  ComponentDecomposition out;
  out.c = c;
  out.e = spec.d / c;
  out.reduced.d = out.e;
  for (long pi : spec.p) out.reduced.p.push_back(pi / c);
  return out;
}

CoverOrder gcd_cover_order(const std::vector<long>& m, const std::vector<int>& I) {
  if (I.empty()) throw EmptySubset("gcd over the empty subset is undefined");
  CoverOrder out;
  long g = 0, sum = 0;
  for (int i : I) {
    if (i < 0 || static_cast<size_t>(i) >= m.size()) throw InvalidInput("subset index out of range");
    if (m[i] < 1) throw InvalidInput("multiplicities must be >= 1");
    g = gcd_positive(g, m[i]);
    sum += m[i];
  }
  out.m_I = g;
  out.c_I = sum;
  for (int i : I) out.alpha.push_back(m[i] / g);
  return out;
}

intmat::Matrix unimodular_completion(const std::vector<Integer>& alpha) {
  const size_t r = alpha.size();
  if (r == 0) throw InvalidInput("empty vector");
  Integer g = 0;
  for (const auto& a : alpha) g = boost::multiprecision::gcd(g, a);
  if (g != 1) throw NotCoprime("entries are not coprime");
  // Column operations shrinking alpha to e_1; V accumulates them, so the
  // completion is V^{-1} (its first row is alpha by construction).
  intmat::Matrix v(r, std::vector<Integer>(r, 0));
  for (size_t i = 0; i < r; ++i) v[i][i] = 1;
  std::vector<Integer> a = alpha;
  for (size_t i = 1; i < r; ++i) {
    if (a[i] == 0) continue;
    // xgcd mix of columns 0 and i
    Integer x = a[0], y = a[i];
    Integer old_x = x, old_s = 1, old_t = 0;
    Integer cur = y, s = 0, t = 1;
    while (cur != 0) {
      Integer q = old_x / cur;
      Integer tmp;
      tmp = old_x - q * cur; old_x = cur; cur = tmp;
      tmp = old_s - q * s; old_s = s; s = tmp;
      tmp = old_t - q * t; old_t = t; t = tmp;
    }
    Integer gg = old_x, u1 = old_s, u2 = old_t;
    if (gg < 0) { gg = -gg; u1 = -u1; u2 = -u2; }
    Integer p = x / gg, q2 = y / gg;
    for (size_t row = 0; row < r; ++row) {
      Integer c0 = v[row][0], ci = v[row][i];
      v[row][0] = u1 * c0 + u2 * ci;
      v[row][i] = p * ci - q2 * c0;
    }
    a[0] = gg;
    a[i] = 0;
  }
  if (a[0] == -1) {
    for (size_t row = 0; row < r; ++row) v[row][0] = -v[row][0];
    a[0] = 1;
  }
  intmat::Matrix m = intmat::unimodular_inverse(v);
  return m;
}

namespace {

// Minimal positive integer t with (t/denom) * e_j in the lattice.
long axis_step(const LatticeModel& m, int j) {
  const int k = m.rank();
  Integer dd = intmat::det(m.rows());
  if (dd < 0) dd = -dd;
  const long bound = static_cast<long>(Integer(m.denom() * dd));
  for (long t = 1; t <= bound; ++t) {
    std::vector<Integer> target(k, 0);
    target[j] = t;
    if (intmat::solve_in_hnf(m.rows(), target).has_value()) return t;
  }
  throw InvalidInput("degenerate lattice: no axis multiple found");
}

}  // namespace

std::vector<std::vector<Rational>> hilbert_basis(const LatticeModel& m) {
  const int k = m.rank();
  if (k > 3) throw RankTooLarge("hilbert_basis supports rank <= 3");
  if (k == 0) return {};
  // Hilbert basis elements of the orthant monoid lie in the box spanned by
  // the minimal lattice points on the axes.
  std::vector<long> step(k);
  for (int j = 0; j < k; ++j) step[j] = axis_step(m, j);
  // Enumerate scaled lattice points in the closed box.
  std::vector<std::vector<Integer>> points;
  std::vector<Integer> cur(k, 0);
  const auto& rows = m.rows();
  std::function<void(int)> rec = [&](int j) {
    if (j == k) {
      bool zero = std::all_of(cur.begin(), cur.end(), [](const Integer& x) { return x == 0; });
      if (!zero && intmat::solve_in_hnf(rows, cur).has_value()) points.push_back(cur);
      return;
    }
    for (long t = 0; t <= step[j]; ++t) {
      cur[j] = t;
      rec(j + 1);
    }
  };
  rec(0);
  std::sort(points.begin(), points.end());
  // Irreducibility: not a sum of two nonzero monoid points (all candidate
  // summands of a box point are box points themselves).
  std::vector<std::vector<Rational>> basis;
  std::set<std::vector<Integer>> point_set(points.begin(), points.end());
  for (const auto& pt : points) {
    bool reducible = false;
    for (const auto& a : points) {
      if (a >= pt) break;
      std::vector<Integer> b(k);
      bool ok = true;
      for (int j = 0; j < k; ++j) {
        b[j] = pt[j] - a[j];
        if (b[j] < 0) { ok = false; break; }
      }
      if (ok && point_set.count(b)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) {
      std::vector<Rational> x(k);
      for (int j = 0; j < k; ++j) x[j] = Rational(pt[j], m.denom());
      basis.push_back(std::move(x));
    }
  }
  return basis;
}

RestrictionAction restriction_action(const CoverSpec& spec, int axis) {
  validate_spec(spec);
  if (axis < 1 || static_cast<size_t>(axis) > spec.p.size()) {
    throw InvalidInput("axis out of range");
  }
  const long p_axis = spec.p[axis - 1];
  RestrictionAction out;
  out.d_prime = gcd_positive(spec.d, p_axis);
  out.exponent = spec.d / out.d_prime;
  return out;
}

}  // namespace motivic::covers
