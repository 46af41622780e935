#include "hyperorbit/exact_linalg.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace hyperorbit {

namespace {

// Row echelon reduction in place; returns pivot columns.
template <class T>
std::vector<int> echelonize(Matrix<T>& a) {
  std::vector<int> pivot_cols;
  size_t row = 0;
  for (size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    size_t p = row;
    while (p < a.rows() && is_zero(a(p, col))) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    T piv_inv = inv(a(row, col));
    for (size_t j = col; j < a.cols(); ++j) a(row, j) = a(row, j) * piv_inv;
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i == row || is_zero(a(i, col))) continue;
      T f = a(i, col);
      for (size_t j = col; j < a.cols(); ++j) a(i, j) = a(i, j) - f * a(row, j);
    }
    pivot_cols.push_back(static_cast<int>(col));
    ++row;
  }
  return pivot_cols;
}

}  // namespace

template <class T>
RankNullspace<T> exact_rank_nullspace(const Matrix<T>& m) {
  Matrix<T> a = m;
  std::vector<int> pivots = echelonize(a);
  RankNullspace<T> out;
  out.rank = static_cast<int>(pivots.size());

  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  for (size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<T> v(m.cols(), sc_zero(m.proto()));
    v[free_col] = sc_one(m.proto());
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -a(r, free_col);
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

template <class T>
int exact_rank(const Matrix<T>& m) {
  Matrix<T> a = m;
  return static_cast<int>(echelonize(a).size());
}

template <class T>
T exact_det(const Matrix<T>& m) {
  if (!m.is_square()) throw DimensionMismatchError();
  Matrix<T> a = m;
  T det = sc_one(m.proto());
  for (size_t col = 0; col < a.cols(); ++col) {
    size_t p = col;
    while (p < a.rows() && is_zero(a(p, col))) ++p;
    if (p == a.rows()) return sc_zero(m.proto());
    if (p != col) {
      for (size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(col, j));
      det = -det;
    }
    det = det * a(col, col);
    T piv_inv = inv(a(col, col));
    for (size_t i = col + 1; i < a.rows(); ++i) {
      if (is_zero(a(i, col))) continue;
      T f = a(i, col) * piv_inv;
      for (size_t j = col; j < a.cols(); ++j) a(i, j) = a(i, j) - f * a(col, j);
    }
  }
  return det;
}

template <class T>
Matrix<T> exact_inverse(const Matrix<T>& m) {
  if (!m.is_square()) throw DimensionMismatchError();
  size_t n = m.rows();
  Matrix<T> aug(n, 2 * n, sc_zero(m.proto()));
  aug.set_submatrix(0, 0, m);
  aug.set_submatrix(0, n, Matrix<T>::identity(n, m.proto()));
  std::vector<int> pivots = echelonize(aug);
  if (static_cast<int>(pivots.size()) != static_cast<int>(n) || pivots.back() >= static_cast<int>(n))
    throw SingularMatrixError();
  return aug.submatrix(0, n, n, n);
}

template <class T>
int exact_rank_permuted(const Matrix<T>& m, unsigned seed) {
  std::vector<size_t> perm(m.rows());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  Matrix<T> a(m.rows(), m.cols(), sc_zero(m.proto()));
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) a(i, j) = m(perm[i], j);
  return exact_rank(a);
}

template struct RankNullspace<Rational>;
template struct RankNullspace<ExactReal>;
template struct RankNullspace<ExactComplex>;
template RankNullspace<Rational> exact_rank_nullspace(const Matrix<Rational>&);
template RankNullspace<ExactReal> exact_rank_nullspace(const Matrix<ExactReal>&);
template RankNullspace<ExactComplex> exact_rank_nullspace(const Matrix<ExactComplex>&);
template int exact_rank(const Matrix<Rational>&);
template int exact_rank(const Matrix<ExactReal>&);
template int exact_rank(const Matrix<ExactComplex>&);
template ExactReal exact_det(const Matrix<ExactReal>&);
template ExactComplex exact_det(const Matrix<ExactComplex>&);
template Matrix<ExactReal> exact_inverse(const Matrix<ExactReal>&);
template Matrix<ExactComplex> exact_inverse(const Matrix<ExactComplex>&);
template int exact_rank_permuted(const Matrix<ExactReal>&, unsigned);
template int exact_rank_permuted(const Matrix<ExactComplex>&, unsigned);

}  // namespace hyperorbit
