#ifndef HYPERORBIT_EXACT_LINALG_HPP
#define HYPERORBIT_EXACT_LINALG_HPP

#include <optional>

#include "hyperorbit/matrix.hpp"

namespace hyperorbit {

struct SingularMatrixError : std::runtime_error {
  SingularMatrixError() : std::runtime_error("matrix is singular") {}
};

template <class T>
struct RankNullspace {
  int rank = 0;
  std::vector<std::vector<T>> nullspace;  // basis vectors, M * v = 0 exactly
};

// Gaussian elimination over an exact field (T = ExactReal or ExactComplex).
// Exact zero tests via the canonical form; no pivot-size heuristics needed.
template <class T>
RankNullspace<T> exact_rank_nullspace(const Matrix<T>& m);

template <class T>
int exact_rank(const Matrix<T>& m);

// Determinant of a square exact matrix.
template <class T>
T exact_det(const Matrix<T>& m);

// Inverse of a square nonsingular exact matrix; throws SingularMatrixError.
template <class T>
Matrix<T> exact_inverse(const Matrix<T>& m);

// Rank computed after permuting rows (independent re-elimination route used
// by certificate soundness checks).
template <class T>
int exact_rank_permuted(const Matrix<T>& m, unsigned seed);

extern template struct RankNullspace<ExactReal>;
extern template struct RankNullspace<ExactComplex>;

}  // namespace hyperorbit

#endif
