#ifndef HYPERORBIT_AFFINE_HPP
#define HYPERORBIT_AFFINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "hyperorbit/exact_linalg.hpp"
#include "hyperorbit/matrix.hpp"
#include "hyperorbit/numeric_linalg.hpp"

namespace hyperorbit {

// f(x) = A x + a
template <class T>
struct AffineMap {
  Matrix<T> linear;        // A, n x n
  std::vector<T> translation;  // a

  int dim() const { return static_cast<int>(translation.size()); }

  static AffineMap identity(int n, const T& like = T()) {
    return {Matrix<T>::identity(n, like), std::vector<T>(n, sc_zero(like))};
  }

  std::vector<T> operator()(const std::vector<T>& x) const {
    std::vector<T> y = linear.apply(x);
    for (size_t i = 0; i < y.size(); ++i) y[i] += translation[i];
    return y;
  }
};

// (A,a) o (B,b) = (AB, Ab + a); Phi(compose(f,g)) = Phi(f) Phi(g)
template <class T>
AffineMap<T> compose(const AffineMap<T>& f, const AffineMap<T>& g) {
  if (f.dim() != g.dim()) throw DimensionMismatchError();
  std::vector<T> t = f.linear.apply(g.translation);
  for (size_t i = 0; i < t.size(); ++i) t[i] += f.translation[i];
  return {f.linear * g.linear, std::move(t)};
}

AffineMap<ExactComplex> affine_inverse(const AffineMap<ExactComplex>& f);
AffineMap<BigComplex> affine_inverse(const AffineMap<BigComplex>& f, const BigFloat& tol);

// Phi: f = (A,a) -> [[1,0],[a,A]], invertible homogeneous embedding.
template <class T>
Matrix<T> phi_embed(const AffineMap<T>& f) {
  int n = f.dim();
  Matrix<T> m(n + 1, n + 1, sc_zero(f.linear.proto()));
  m(0, 0) = sc_one(f.linear.proto());
  for (int i = 0; i < n; ++i) {
    m(i + 1, 0) = f.translation[i];
    for (int j = 0; j < n; ++j) m(i + 1, j + 1) = f.linear(i, j);
  }
  return m;
}

// Psi: f = (A,a) -> [[0,0],[a,A]], the linear embedding onto F_{n+1}.
template <class T>
Matrix<T> psi_embed(const AffineMap<T>& f) {
  Matrix<T> m = phi_embed(f);
  m(0, 0) = sc_zero(f.linear.proto());
  return m;
}

// Inverse of psi_embed; requires a zero first row.
template <class T>
AffineMap<T> psi_unembed(const Matrix<T>& m) {
  int n = static_cast<int>(m.rows()) - 1;
  AffineMap<T> f{Matrix<T>(n, n, sc_zero(m.proto())), std::vector<T>(n, sc_zero(m.proto()))};
  for (int i = 0; i < n; ++i) {
    f.translation[i] = m(i + 1, 0);
    for (int j = 0; j < n; ++j) f.linear(i, j) = m(i + 1, j + 1);
  }
  return f;
}

template <class T>
AffineMap<T> phi_unembed(const Matrix<T>& m) {
  return psi_unembed(m);
}

template <class T>
struct AffinePresentation {
  int n = 0;
  std::vector<AffineMap<T>> generators;                    // f_1,...,f_p
  std::optional<std::vector<AffineMap<T>>> log_generators; // f'_1,...,f'_p
  std::optional<Matrix<T>> hint_P;                         // (n+1)x(n+1), first row (1,0,...,0)
  std::optional<BlockStructure> hint_eta;

  int p() const { return static_cast<int>(generators.size()); }
};

struct ValidationIssue {
  enum Kind { NotInvertible, NotAbelian, LogMismatch, BadShape } kind;
  int k = -1, j = -1;       // offending generator indices (1-based)
  std::string detail;
};

struct ValidationReport {
  bool ok = true;
  std::vector<ValidationIssue> issues;
  double max_commutator_residual = 0.0;  // numeric backends only
  double max_log_residual = 0.0;
};

// det(A_k) != 0, pairwise commuting (exact equality on the exact backend,
// componentwise <= tol numerically), and exp(Psi(f'_k)) = Phi(f_k) when
// log generators are present (numeric check at the given precision).
ValidationReport validate_presentation(const AffinePresentation<ExactComplex>& g, mpfr_prec_t prec);
ValidationReport validate_presentation(const AffinePresentation<BigComplex>& g);

// (f_1^{e_1} o ... o f_p^{e_p})(x); order is irrelevant for abelian input.
// Generator inverses are taken only when a negative exponent appears.
std::vector<ExactComplex> apply_orbit_word(const AffinePresentation<ExactComplex>& g,
                                           const std::vector<long>& exponents,
                                           const std::vector<ExactComplex>& x);
std::vector<BigComplex> apply_orbit_word(const AffinePresentation<BigComplex>& g,
                                         const std::vector<long>& exponents,
                                         const std::vector<BigComplex>& x);

extern template struct AffineMap<ExactComplex>;
extern template struct AffineMap<BigComplex>;

}  // namespace hyperorbit

#endif
