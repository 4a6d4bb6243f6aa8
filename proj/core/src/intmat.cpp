#include "motivic/intmat.hpp"

#include <algorithm>
#include <cassert>

#include "motivic/errors.hpp"

namespace motivic::intmat {

namespace {

Integer xgcd(const Integer& a, const Integer& b, Integer& u, Integer& v) {
  if (b == 0) {
    u = a >= 0 ? 1 : -1;
    v = 0;
    return boost::multiprecision::abs(a);
  }
  Integer u1, v1;
  Integer g = xgcd(b, a % b, u1, v1);
  u = v1;
  v = u1 - (a / b) * v1;
  return g;
}

}  // namespace

Matrix hnf(Matrix a) {
  if (a.empty()) return a;
  const size_t rows = a.size(), cols = a[0].size();
  size_t r = 0;
  for (size_t col = 0; col < cols && r < rows; ++col) {
    size_t pivot = r;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    for (size_t j = r + 1; j < rows; ++j) {
      if (a[j][col] == 0) continue;
      Integer u, v;
      Integer g = xgcd(a[r][col], a[j][col], u, v);
      Integer p = a[r][col] / g, q = a[j][col] / g;
      for (size_t t = 0; t < cols; ++t) {
        Integer x = a[r][t], y = a[j][t];
        a[r][t] = u * x + v * y;
        a[j][t] = p * y - q * x;
      }
    }
    if (a[r][col] < 0) {
      for (auto& x : a[r]) x = -x;
    }
    for (size_t j = 0; j < r; ++j) {
      Integer f = a[j][col] / a[r][col];
      if (a[j][col] - f * a[r][col] < 0) f -= 1;  // floor division
      if (f == 0) continue;
      for (size_t t = 0; t < cols; ++t) a[j][t] -= f * a[r][t];
    }
    ++r;
  }
  a.resize(r);
  return a;
}

Integer det(const Matrix& a) {
  const size_t n = a.size();
  assert(n == 0 || a[0].size() == n);
  if (n == 0) return 1;
  Matrix m = a;
  Integer sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

Integer minor_det(const Matrix& a, size_t skip_row, size_t skip_col) {
  const size_t n = a.size();
  Matrix m;
  m.reserve(n - 1);
  for (size_t i = 0; i < n; ++i) {
    if (i == skip_row) continue;
    std::vector<Integer> row;
    row.reserve(n - 1);
    for (size_t j = 0; j < n; ++j) {
      if (j == skip_col) continue;
      row.push_back(a[i][j]);
    }
    m.push_back(std::move(row));
  }
  return det(m);
}

}  // namespace

Matrix unimodular_inverse(const Matrix& a) {
  const size_t n = a.size();
  Integer d = det(a);
  if (d != 1 && d != -1) throw InvalidInput("matrix is not unimodular");
  Matrix inv = adjugate(a);
  for (auto& row : inv)
    for (auto& x : row) x *= d;  // d = 1/d for |d| = 1
  return inv;
}

Matrix adjugate(const Matrix& a) {
  const size_t n = a.size();
  Matrix adj(n, std::vector<Integer>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Integer c = minor_det(a, j, i);
      if ((i + j) % 2 == 1) c = -c;
      adj[i][j] = c;
    }
  return adj;
}

std::optional<std::vector<Integer>> solve_in_hnf(const Matrix& h,
                                                 const std::vector<Integer>& b) {
  const size_t rows = h.size();
  const size_t cols = b.size();
  std::vector<Integer> x(rows, 0);
  std::vector<Integer> rem = b;
  size_t col = 0;
  for (size_t r = 0; r < rows; ++r) {
    while (col < cols && h[r][col] == 0) {
      if (rem[col] != 0) return std::nullopt;
      ++col;
    }
    if (col == cols) return std::nullopt;
    if (rem[col] % h[r][col] != 0) return std::nullopt;
    x[r] = rem[col] / h[r][col];
    for (size_t t = col; t < cols; ++t) rem[t] -= x[r] * h[r][t];
    ++col;
  }
  for (size_t t = 0; t < cols; ++t) {
    if (rem[t] != 0) return std::nullopt;
  }
  return x;
}

Matrix kernel_of_form(const std::vector<Integer>& v) {
  const size_t n = v.size();
  // Column-HNF of the single-column matrix v^T with transform tracking: U
  // unimodular with U * v = (g, 0, .., 0)^T; kernel rows are U's rows 2..n.
  Matrix u(n, std::vector<Integer>(n, 0));
  for (size_t i = 0; i < n; ++i) u[i][i] = 1;
  std::vector<Integer> w = v;
  for (size_t i = 1; i < n; ++i) {
    if (w[i] == 0) continue;
    Integer s, t;
    Integer g = xgcd(w[0], w[i], s, t);
    Integer p = w[0] / g, q = w[i] / g;
    for (size_t c = 0; c < n; ++c) {
      Integer r0 = u[0][c], ri = u[i][c];
      u[0][c] = s * r0 + t * ri;
      u[i][c] = p * ri - q * r0;
    }
    w[0] = g;
    w[i] = 0;
  }
  Matrix kernel;
  if (w[0] == 0) kernel.push_back(u[0]);
  for (size_t i = 1; i < n; ++i) kernel.push_back(u[i]);
  return kernel;
}

std::vector<Rational> solve_cramer(const Matrix& a, const std::vector<Integer>& b) {
  const size_t n = a.size();
  Integer d = det(a);
  if (d == 0) throw InvalidInput("singular system");
  std::vector<Rational> x(n);
  for (size_t j = 0; j < n; ++j) {
    Matrix m = a;
    for (size_t i = 0; i < n; ++i) m[i][j] = b[i];
    Integer num = det(m);
    // Keep the denominator positive: the rational constructor rejects
    // negative denominators for unbounded integer types.
    x[j] = d < 0 ? Rational(-num, -d) : Rational(num, d);
  }
  return x;
}

}  // namespace motivic::intmat
