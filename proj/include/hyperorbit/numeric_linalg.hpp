#ifndef HYPERORBIT_NUMERIC_LINALG_HPP
#define HYPERORBIT_NUMERIC_LINALG_HPP

#include <vector>

#include "hyperorbit/matrix.hpp"

namespace hyperorbit {

struct NumericSingularError : std::runtime_error {
  NumericSingularError() : std::runtime_error("numeric pivot below tolerance") {}
};

// Number of column-pivoted QR pivots with |r_jj| > tol * ||M||, where ||M||
// is estimated by the largest pivot.
int numeric_rank(const Matrix<BigComplex>& m, const BigFloat& tol);
int numeric_rank(const Matrix<BigFloat>& m, const BigFloat& tol);

// Orthonormal-ish basis of the (right) nullspace at tolerance tol, from the
// pivoted QR factorization. Columns of the returned matrix span ker(M).
Matrix<BigComplex> numeric_nullspace(const Matrix<BigComplex>& m, const BigFloat& tol);
Matrix<BigFloat> numeric_nullspace(const Matrix<BigFloat>& m, const BigFloat& tol);

// Rank decision bundled with an ambiguity flag: ambiguous when some pivot
// falls within a factor of 2^16 of the threshold on either side.
struct RankDecision {
  int rank = 0;
  bool ambiguous = false;
};
RankDecision numeric_rank_decide(const Matrix<BigFloat>& m, const BigFloat& tol);

// Solves the square system A x = b by partial-pivot elimination.
std::vector<BigComplex> numeric_solve(const Matrix<BigComplex>& a, const std::vector<BigComplex>& b,
                                      const BigFloat& tol);
Matrix<BigComplex> numeric_inverse(const Matrix<BigComplex>& a, const BigFloat& tol);

// Least-squares solution of the (possibly tall) system A x = b via Householder QR.
std::vector<BigComplex> least_squares(const Matrix<BigComplex>& a, const std::vector<BigComplex>& b);

// Householder QR (no pivoting): returns Q with orthonormal columns (m x n, m >= n).
Matrix<BigComplex> orthonormal_columns(const Matrix<BigComplex>& a);

// exp(M) by scaling-and-squaring on a truncated Taylor series. Serves as the
// structure-free oracle against the blockwise exponential.
Matrix<BigComplex> matrix_exp_numeric(const Matrix<BigComplex>& m);

// Characteristic polynomial coefficients (monic, ascending: c[0] + c[1] x + ... + x^n)
// by the Faddeev-LeVerrier recurrence.
std::vector<BigComplex> charpoly(const Matrix<BigComplex>& m);

// All roots of a monic polynomial by Durand-Kerner iteration at elevated
// working precision.
std::vector<BigComplex> polynomial_roots(const std::vector<BigComplex>& monic_ascending);

std::vector<BigComplex> eigenvalues(const Matrix<BigComplex>& m);

}  // namespace hyperorbit

#endif
