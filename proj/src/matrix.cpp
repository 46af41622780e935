#include "hyperorbit/matrix.hpp"

namespace hyperorbit {

namespace {

// Shared structural walk: calls bad(i, j) for every entry that must vanish
// and diag_pair(i, j) for every same-block diagonal pair to compare.
template <class OffBlock, class DiagPair>
bool check_structure(size_t order, const BlockStructure& eta, OffBlock&& off, DiagPair&& diag) {
  if (eta.order() != static_cast<int>(order)) return false;
  for (int k = 0; k < eta.count(); ++k) {
    int s = eta.start(k), m = eta.size(k);
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (!off(s + i, s + j)) return false;  // above diagonal inside block
    for (int i = 1; i < m; ++i)
      if (!diag(s + i, s)) return false;  // constant diagonal
  }
  // off-block entries
  for (int k = 0; k < eta.count(); ++k) {
    int sk = eta.start(k), mk = eta.size(k);
    for (int l = 0; l < eta.count(); ++l) {
      if (l == k) continue;
      int sl = eta.start(l), ml = eta.size(l);
      for (int i = 0; i < mk; ++i)
        for (int j = 0; j < ml; ++j)
          if (!off(sk + i, sl + j)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_block_lower_triangular(const Matrix<ExactComplex>& m, const BlockStructure& eta) {
  if (!m.is_square()) throw DimensionMismatchError();
  return check_structure(
      m.rows(), eta, [&](size_t i, size_t j) { return m(i, j).is_zero(); },
      [&](size_t i, size_t s) { return m(i, i) == m(s, s); });
}

bool is_block_lower_triangular(const Matrix<BigComplex>& m, const BlockStructure& eta,
                               const BigFloat& tol) {
  if (!m.is_square()) throw DimensionMismatchError();
  return check_structure(
      m.rows(), eta, [&](size_t i, size_t j) { return m(i, j).abs() <= tol; },
      [&](size_t i, size_t s) { return (m(i, i) - m(s, s)).abs() <= tol; });
}

Matrix<BigComplex> to_numeric(const Matrix<ExactComplex>& m, mpfr_prec_t prec) {
  Matrix<BigComplex> out(m.rows(), m.cols(), BigComplex(prec));
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) out(i, j) = to_numeric(m(i, j), prec);
  return out;
}

std::vector<BigComplex> to_numeric(const std::vector<ExactComplex>& v, mpfr_prec_t prec) {
  std::vector<BigComplex> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(to_numeric(x, prec));
  return out;
}

BigFloat max_abs_diff(const Matrix<BigComplex>& a, const Matrix<BigComplex>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatchError();
  BigFloat m(a.rows() ? a.proto().prec() : 64);
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      BigFloat d = (a(i, j) - b(i, j)).abs();
      if (d > m) m = d;
    }
  return m;
}

BigFloat max_abs(const Matrix<BigComplex>& m) {
  BigFloat r(m.rows() ? m.proto().prec() : 64);
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) {
      BigFloat d = m(i, j).abs();
      if (d > r) r = d;
    }
  return r;
}

BigFloat frobenius_norm(const Matrix<BigComplex>& m) {
  BigFloat s(m.rows() ? m.proto().prec() : 64);
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) {
      const BigComplex& z = m(i, j);
      s += z.re * z.re + z.im * z.im;
    }
  return s.sqrt();
}

BigFloat frobenius_norm(const Matrix<BigFloat>& m) {
  BigFloat s(m.rows() ? m.proto().prec() : 64);
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) s += m(i, j) * m(i, j);
  return s.sqrt();
}

}  // namespace hyperorbit
