#pragma once

#include <optional>
#include <vector>

#include "motivic/numeric.hpp"

namespace motivic::intmat {

using Matrix = std::vector<std::vector<Integer>>;

/// Row-style Hermite normal form of the lattice spanned by the rows: row
/// echelon, positive pivots, entries above each pivot reduced into [0, pivot).
/// Zero rows are dropped, so the result's row count is the rank.
Matrix hnf(Matrix a);

/// Exact determinant (fraction-free elimination).  pre: square
Integer det(const Matrix& a);

/// Inverse of a matrix with det = +-1, via the adjugate.  pre: square, |det|=1
Matrix unimodular_inverse(const Matrix& a);

/// Adjugate (transposed cofactor matrix): a * adjugate(a) = det(a) * I.
/// pre: square
Matrix adjugate(const Matrix& a);

/// Solves x * a = b for an integer row vector x given a in row-HNF form with
/// full column span of b; nullopt when b is not in the row lattice of a.
std::optional<std::vector<Integer>> solve_in_hnf(const Matrix& hnf_rows,
                                                 const std::vector<Integer>& b);

/// Basis (as rows) of the integer kernel { c : sum_i c_i v_i = 0 } of a
/// linear form with integer coefficients v.
Matrix kernel_of_form(const std::vector<Integer>& v);

/// Rational solution of a * x = b by Cramer's rule.  pre: square, det != 0.
/// Returns the vector of (numerator, denominator=det) as exact rationals.
std::vector<Rational> solve_cramer(const Matrix& a, const std::vector<Integer>& b);

}  // namespace motivic::intmat
