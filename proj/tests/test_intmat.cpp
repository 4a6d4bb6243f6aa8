#include "doctest.h"
#include "motivic/errors.hpp"
#include "motivic/intmat.hpp"

using namespace motivic;
using intmat::Matrix;

TEST_CASE("hermite normal form") {
  CHECK(intmat::hnf({{2, 4}, {1, 3}}) == Matrix{{1, 1}, {0, 2}});
  CHECK(intmat::hnf({{1, 0}, {0, 1}}) == Matrix{{1, 0}, {0, 1}});
  // Rank-deficient input drops to its row rank.
  CHECK(intmat::hnf({{2, 4}, {1, 2}}) == Matrix{{1, 2}});
  CHECK(intmat::hnf({{0, 0}, {0, 0}}) == Matrix{});
  // Negative entries normalize to positive pivots with reduced columns above.
  CHECK(intmat::hnf({{-2, 0}, {0, -3}}) == Matrix{{2, 0}, {0, 3}});
}

TEST_CASE("determinant") {
  CHECK(intmat::det({}) == 1);
  CHECK(intmat::det({{7}}) == 7);
  CHECK(intmat::det({{1, 1}, {2, 1}}) == -1);
  CHECK(intmat::det({{2, 3}, {4, 5}}) == -2);
  CHECK(intmat::det({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}) == -3);
  CHECK(intmat::det({{1, 2}, {2, 4}}) == 0);
  // A zero pivot forces a row swap (sign flip).
  CHECK(intmat::det({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}) == -1);
  CHECK(intmat::det({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}) == -1);
}

TEST_CASE("adjugate identity") {
  const Matrix samples[] = {
      {{1, 1}, {2, 1}},
      {{1, 2, 3}, {4, 5, 6}, {7, 8, 10}},
      {{2, 0, 0}, {0, 3, 0}, {0, 0, 5}},
  };
  for (const Matrix& a : samples) {
    const Integer d = intmat::det(a);
    const Matrix adj = intmat::adjugate(a);
    const size_t n = a.size();
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) {
        Integer s = 0;
        for (size_t k = 0; k < n; ++k) s += a[i][k] * adj[k][j];
        CHECK(s == (i == j ? d : Integer(0)));
      }
    }
  }
}

TEST_CASE("unimodular inverse") {
  CHECK(intmat::unimodular_inverse({{1, 1}, {0, 1}}) == Matrix{{1, -1}, {0, 1}});
  const Matrix a = {{2, 1}, {1, 1}};  // det 1
  const Matrix inv = intmat::unimodular_inverse(a);
  CHECK(inv == Matrix{{1, -1}, {-1, 2}});
  CHECK_THROWS_AS(intmat::unimodular_inverse({{2, 0}, {0, 1}}), InvalidInput);
}

TEST_CASE("cramer solve") {
  // Negative determinant; the denominators still normalize.
  const auto x = intmat::solve_cramer({{1, 1}, {2, 1}}, {2, 3});
  CHECK(x == std::vector<Rational>{1, 1});
  const auto y = intmat::solve_cramer({{1, 1}, {0, 1}}, {2, 3});
  CHECK(y == std::vector<Rational>{-1, 3});
  const auto z = intmat::solve_cramer({{2}}, {3});
  CHECK(z == std::vector<Rational>{Rational(3, 2)});
  CHECK_THROWS_AS(intmat::solve_cramer({{1, 2}, {2, 4}}, {1, 1}), InvalidInput);
}

TEST_CASE("solve against a normal form") {
  const Matrix h = {{1, 1}, {0, 2}};
  const auto sol = intmat::solve_in_hnf(h, {1, 3});
  REQUIRE(sol.has_value());
  CHECK(*sol == std::vector<Integer>{1, 1});
  CHECK_FALSE(intmat::solve_in_hnf(h, {1, 2}).has_value());
  // A pivot gap forces the skipped coordinate to vanish.
  const Matrix g = {{0, 1}};
  CHECK_FALSE(intmat::solve_in_hnf(g, {1, 1}).has_value());
  const auto sol2 = intmat::solve_in_hnf(g, {0, 4});
  REQUIRE(sol2.has_value());
  CHECK(*sol2 == std::vector<Integer>{4});
}

TEST_CASE("kernel of a linear form") {
  const auto k = intmat::kernel_of_form({2, 3});
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] * 2 + k[0][1] * 3 == 0);
  CHECK_FALSE(k[0] == std::vector<Integer>{0, 0});

  const auto k3 = intmat::kernel_of_form({2, 3, 5});
  REQUIRE(k3.size() == 2);
  for (const auto& row : k3) {
    CHECK(row[0] * 2 + row[1] * 3 + row[2] * 5 == 0);
  }
  // Independence: the kernel rows have full row rank.
  CHECK(intmat::hnf(k3).size() == 2);

  const auto kz = intmat::kernel_of_form({0, 0});
  CHECK(kz.size() == 2);
}
