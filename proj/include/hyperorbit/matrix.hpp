#ifndef HYPERORBIT_MATRIX_HPP
#define HYPERORBIT_MATRIX_HPP

#include <stdexcept>
#include <vector>

#include "hyperorbit/bigfloat.hpp"
#include "hyperorbit/exact.hpp"

namespace hyperorbit {

struct DimensionMismatchError : std::runtime_error {
  DimensionMismatchError() : std::runtime_error("matrix dimension mismatch") {}
};

// Scalar prototypes: numeric scalars inherit the prototype's precision,
// exact scalars ignore it.
inline Rational sc_zero(const Rational&) { return Rational(0); }
inline Rational sc_one(const Rational&) { return Rational(1); }
inline ExactReal sc_zero(const ExactReal&) { return ExactReal(0); }
inline ExactReal sc_one(const ExactReal&) { return ExactReal(1); }
inline ExactComplex sc_zero(const ExactComplex&) { return ExactComplex(0); }
inline ExactComplex sc_one(const ExactComplex&) { return ExactComplex(1); }
inline BigFloat sc_zero(const BigFloat& like) { return BigFloat(like.prec()); }
inline BigFloat sc_one(const BigFloat& like) { return BigFloat::from_long(1, like.prec()); }
inline BigComplex sc_zero(const BigComplex& like) { return BigComplex(like.prec()); }
inline BigComplex sc_one(const BigComplex& like) { return BigComplex::from_long(1, like.prec()); }

inline BigFloat sc_scale(const BigFloat& x, const BigFloat& s) { return x * s; }
inline BigComplex sc_scale(const BigComplex& x, const BigFloat& s) { return x * s; }

template <class T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(size_t rows, size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), e_(rows * cols, fill) {}

  static Matrix identity(size_t n, const T& like = T()) {
    Matrix m(n, n, sc_zero(like));
    for (size_t i = 0; i < n; ++i) m(i, i) = sc_one(like);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(size_t i, size_t j) { return e_[i * cols_ + j]; }
  const T& operator()(size_t i, size_t j) const { return e_[i * cols_ + j]; }

  const T& proto() const {
    if (e_.empty()) throw std::logic_error("empty matrix has no prototype element");
    return e_[0];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, e_.empty() ? T() : sc_zero(e_[0]));
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatchError();
    Matrix c = a;
    for (size_t k = 0; k < c.e_.size(); ++k) c.e_[k] = a.e_[k] + b.e_[k];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatchError();
    Matrix c = a;
    for (size_t k = 0; k < c.e_.size(); ++k) c.e_[k] = a.e_[k] - b.e_[k];
    return c;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatchError();
    Matrix c(a.rows_, b.cols_, sc_zero(a.proto()));
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        for (size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  std::vector<T> apply(const std::vector<T>& x) const {
    if (x.size() != cols_) throw DimensionMismatchError();
    std::vector<T> y(rows_, sc_zero(proto()));
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  Matrix submatrix(size_t i0, size_t j0, size_t nr, size_t nc) const {
    Matrix s(nr, nc, sc_zero(proto()));
    for (size_t i = 0; i < nr; ++i)
      for (size_t j = 0; j < nc; ++j) s(i, j) = (*this)(i0 + i, j0 + j);
    return s;
  }

  void set_submatrix(size_t i0, size_t j0, const Matrix& s) {
    for (size_t i = 0; i < s.rows_; ++i)
      for (size_t j = 0; j < s.cols_; ++j) (*this)(i0 + i, j0 + j) = s(i, j);
  }

 private:
  size_t rows_, cols_;
  std::vector<T> e_;
};

// Partition eta = (n_1,...,n_r) of a matrix order.
class BlockStructure {
 public:
  BlockStructure() = default;
  explicit BlockStructure(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    for (int s : sizes_)
      if (s <= 0) throw std::invalid_argument("block sizes must be positive");
  }

  int order() const {
    int n = 0;
    for (int s : sizes_) n += s;
    return n;
  }
  int count() const { return static_cast<int>(sizes_.size()); }
  int size(int k) const { return sizes_[k]; }
  int start(int k) const {
    int s = 0;
    for (int j = 0; j < k; ++j) s += sizes_[j];
    return s;
  }
  const std::vector<int>& sizes() const { return sizes_; }

  friend bool operator==(const BlockStructure& a, const BlockStructure& b) {
    return a.sizes_ == b.sizes_;
  }

 private:
  std::vector<int> sizes_;
};

// True iff M is block-diagonal along eta with each block lower triangular
// with a constant diagonal (the T_m shape). Exact equality for exact
// scalars; |entry| <= tol for numeric.
bool is_block_lower_triangular(const Matrix<ExactComplex>& m, const BlockStructure& eta);
bool is_block_lower_triangular(const Matrix<BigComplex>& m, const BlockStructure& eta,
                               const BigFloat& tol);

Matrix<BigComplex> to_numeric(const Matrix<ExactComplex>& m, mpfr_prec_t prec);
std::vector<BigComplex> to_numeric(const std::vector<ExactComplex>& v, mpfr_prec_t prec);

// max_{ij} |a_ij - b_ij|
BigFloat max_abs_diff(const Matrix<BigComplex>& a, const Matrix<BigComplex>& b);
BigFloat max_abs(const Matrix<BigComplex>& m);
BigFloat frobenius_norm(const Matrix<BigComplex>& m);
BigFloat frobenius_norm(const Matrix<BigFloat>& m);

}  // namespace hyperorbit

#endif
