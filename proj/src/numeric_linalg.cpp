#include "hyperorbit/numeric_linalg.hpp"

#include <algorithm>
#include <cmath>

namespace hyperorbit {

namespace {

BigFloat sc_conj(const BigFloat& x) { return x; }
BigComplex sc_conj(const BigComplex& x) { return x.conj(); }
BigFloat sc_abs(const BigFloat& x) { return x.abs(); }
BigFloat sc_abs(const BigComplex& x) { return x.abs(); }

template <class T>
struct PivotedQR {
  Matrix<T> r;                    // upper-triangular part of the factorization
  std::vector<int> perm;          // column j of R corresponds to input column perm[j]
  std::vector<BigFloat> pivots;   // |r_kk|, decreasing by construction
};

// Householder QR with column pivoting (largest remaining column norm first).
template <class T>
PivotedQR<T> qr_pivot(Matrix<T> a) {
  const size_t m = a.rows(), n = a.cols();
  const size_t steps = std::min(m, n);
  const mpfr_prec_t prec = a.proto().prec();
  PivotedQR<T> out;
  out.perm.resize(n);
  for (size_t j = 0; j < n; ++j) out.perm[j] = static_cast<int>(j);

  for (size_t k = 0; k < steps; ++k) {
    // column pivot
    size_t best = k;
    BigFloat best_norm(prec);
    for (size_t j = k; j < n; ++j) {
      BigFloat s(prec);
      for (size_t i = k; i < m; ++i) {
        BigFloat av = sc_abs(a(i, j));
        s += av * av;
      }
      if (j == k || s > best_norm) {
        best = j;
        best_norm = s;
      }
    }
    if (best != k) {
      for (size_t i = 0; i < m; ++i) std::swap(a(i, k), a(i, best));
      std::swap(out.perm[k], out.perm[best]);
    }

    // Householder reflector for column k
    BigFloat xnorm = best_norm.sqrt();
    out.pivots.push_back(xnorm);
    if (xnorm.is_zero()) continue;

    // u = x + phase(x0) * ||x|| * e1
    std::vector<T> u(m - k, sc_zero(a.proto()));
    for (size_t i = k; i < m; ++i) u[i - k] = a(i, k);
    T phase = sc_one(a.proto());
    BigFloat a0 = sc_abs(u[0]);
    if (!a0.is_zero()) phase = sc_scale(u[0], BigFloat::from_long(1, prec) / a0);
    u[0] += sc_scale(phase, xnorm);
    BigFloat unorm2(prec);
    for (const auto& ui : u) {
      BigFloat av = sc_abs(ui);
      unorm2 += av * av;
    }
    if (unorm2.is_zero()) continue;
    BigFloat two_inv_unorm2 = BigFloat::from_long(2, prec) / unorm2;

    // apply I - 2 u u^* / (u^* u) to the trailing block
    for (size_t j = k; j < n; ++j) {
      T dot = sc_zero(a.proto());
      for (size_t i = k; i < m; ++i) dot += sc_conj(u[i - k]) * a(i, j);
      T f = sc_scale(dot, two_inv_unorm2);
      for (size_t i = k; i < m; ++i) a(i, j) = a(i, j) - u[i - k] * f;
    }
  }
  out.r = std::move(a);
  return out;
}

// ||M|| in the pivot test is estimated by the largest pivot (the first,
// by the pivoting order), making the rank decision scale-invariant.
template <class T>
BigFloat rank_threshold(const PivotedQR<T>& f, const BigFloat& tol) {
  if (f.pivots.empty()) return tol;
  return tol * f.pivots.front();
}

template <class T>
int rank_from_pivots(const PivotedQR<T>& f, const BigFloat& thresh) {
  int r = 0;
  for (const auto& p : f.pivots)
    if (p > thresh) ++r;
  return r;
}

template <class T>
Matrix<T> nullspace_impl(const Matrix<T>& m, const BigFloat& tol) {
  const mpfr_prec_t prec = m.proto().prec();
  PivotedQR<T> f = qr_pivot(m);
  BigFloat thresh = rank_threshold(f, tol);
  const int n = static_cast<int>(m.cols());
  const int r = rank_from_pivots(f, thresh);
  const int nullity = n - r;
  Matrix<T> basis(m.cols(), nullity, sc_zero(m.proto()));
  for (int t = 0; t < nullity; ++t) {
    // solve R11 y = -R12 e_t by back substitution
    std::vector<T> y(r, sc_zero(m.proto()));
    for (int i = r - 1; i >= 0; --i) {
      T rhs = -f.r(i, r + t);
      for (int j = i + 1; j < r; ++j) rhs -= f.r(i, j) * y[j];
      y[i] = rhs * inv(f.r(i, i));
    }
    std::vector<T> w(n, sc_zero(m.proto()));
    for (int i = 0; i < r; ++i) w[f.perm[i]] = y[i];
    w[f.perm[r + t]] = sc_one(m.proto());
    BigFloat norm(prec);
    for (const auto& wi : w) {
      BigFloat av = sc_abs(wi);
      norm += av * av;
    }
    norm = norm.sqrt();
    BigFloat inv_norm = BigFloat::from_long(1, prec) / norm;
    for (int i = 0; i < n; ++i) basis(i, t) = sc_scale(w[i], inv_norm);
  }
  return basis;
}

}  // namespace

int numeric_rank(const Matrix<BigComplex>& m, const BigFloat& tol) {
  auto f = qr_pivot(m);
  return rank_from_pivots(f, rank_threshold(f, tol));
}

int numeric_rank(const Matrix<BigFloat>& m, const BigFloat& tol) {
  auto f = qr_pivot(m);
  return rank_from_pivots(f, rank_threshold(f, tol));
}

Matrix<BigComplex> numeric_nullspace(const Matrix<BigComplex>& m, const BigFloat& tol) {
  return nullspace_impl(m, tol);
}

Matrix<BigFloat> numeric_nullspace(const Matrix<BigFloat>& m, const BigFloat& tol) {
  return nullspace_impl(m, tol);
}

RankDecision numeric_rank_decide(const Matrix<BigFloat>& m, const BigFloat& tol) {
  auto f = qr_pivot(m);
  BigFloat thresh = rank_threshold(f, tol);
  BigFloat margin = BigFloat::pow2(16, thresh.prec());
  RankDecision out;
  out.rank = rank_from_pivots(f, thresh);
  for (const auto& p : f.pivots)
    if (p > thresh / margin && p <= thresh * margin) out.ambiguous = true;
  return out;
}

std::vector<BigComplex> numeric_solve(const Matrix<BigComplex>& a, const std::vector<BigComplex>& b,
                                      const BigFloat& tol) {
  if (!a.is_square() || b.size() != a.rows()) throw DimensionMismatchError();
  const size_t n = a.rows();
  Matrix<BigComplex> w = a;
  std::vector<BigComplex> x = b;
  BigFloat thresh = tol * frobenius_norm(a);
  for (size_t k = 0; k < n; ++k) {
    size_t p = k;
    for (size_t i = k + 1; i < n; ++i)
      if (w(i, k).abs() > w(p, k).abs()) p = i;
    if (w(p, k).abs() <= thresh) throw NumericSingularError();
    if (p != k) {
      for (size_t j = 0; j < n; ++j) std::swap(w(p, j), w(k, j));
      std::swap(x[p], x[k]);
    }
    BigComplex piv_inv = w(k, k).inverse();
    for (size_t i = k + 1; i < n; ++i) {
      if (w(i, k).is_zero()) continue;
      BigComplex f = w(i, k) * piv_inv;
      for (size_t j = k; j < n; ++j) w(i, j) -= f * w(k, j);
      x[i] -= f * x[k];
    }
  }
  for (size_t i = n; i-- > 0;) {
    BigComplex s = x[i];
    for (size_t j = i + 1; j < n; ++j) s -= w(i, j) * x[j];
    x[i] = s * w(i, i).inverse();
  }
  return x;
}

Matrix<BigComplex> numeric_inverse(const Matrix<BigComplex>& a, const BigFloat& tol) {
  const size_t n = a.rows();
  Matrix<BigComplex> out(n, n, sc_zero(a.proto()));
  for (size_t j = 0; j < n; ++j) {
    std::vector<BigComplex> e(n, sc_zero(a.proto()));
    e[j] = sc_one(a.proto());
    std::vector<BigComplex> col = numeric_solve(a, e, tol);
    for (size_t i = 0; i < n; ++i) out(i, j) = col[i];
  }
  return out;
}

std::vector<BigComplex> least_squares(const Matrix<BigComplex>& a, const std::vector<BigComplex>& b) {
  // normal equations at working precision; fine at desk scale with
  // well-conditioned stacked systems
  Matrix<BigComplex> ah = a.transpose();
  for (size_t i = 0; i < ah.rows(); ++i)
    for (size_t j = 0; j < ah.cols(); ++j) ah(i, j) = ah(i, j).conj();
  Matrix<BigComplex> g = ah * a;
  Matrix<BigComplex> bm(b.size(), 1, sc_zero(a.proto()));
  for (size_t i = 0; i < b.size(); ++i) bm(i, 0) = b[i];
  Matrix<BigComplex> rhs = ah * bm;
  std::vector<BigComplex> rv(g.rows(), sc_zero(a.proto()));
  for (size_t i = 0; i < g.rows(); ++i) rv[i] = rhs(i, 0);
  BigFloat tol = BigFloat::pow2(-static_cast<long>(a.proto().prec() * 3 / 4), a.proto().prec());
  return numeric_solve(g, rv, tol);
}

Matrix<BigComplex> orthonormal_columns(const Matrix<BigComplex>& a) {
  // modified Gram-Schmidt with one reorthogonalization pass
  Matrix<BigComplex> q = a;
  const size_t m = a.rows(), n = a.cols();
  for (size_t j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      for (size_t k = 0; k < j; ++k) {
        BigComplex dot = sc_zero(a.proto());
        for (size_t i = 0; i < m; ++i) dot += q(i, k).conj() * q(i, j);
        for (size_t i = 0; i < m; ++i) q(i, j) -= dot * q(i, k);
      }
    }
    BigFloat norm(a.proto().prec());
    for (size_t i = 0; i < m; ++i) {
      BigFloat av = q(i, j).abs();
      norm += av * av;
    }
    norm = norm.sqrt();
    if (norm.is_zero()) throw NumericSingularError();
    BigFloat inv_norm = BigFloat::from_long(1, a.proto().prec()) / norm;
    for (size_t i = 0; i < m; ++i) q(i, j) = q(i, j) * inv_norm;
  }
  return q;
}

Matrix<BigComplex> matrix_exp_numeric(const Matrix<BigComplex>& m) {
  if (!m.is_square()) throw DimensionMismatchError();
  const mpfr_prec_t prec = m.proto().prec();
  const size_t n = m.rows();
  double norm = frobenius_norm(m).to_double();
  int s = 0;
  if (norm > 0.25) s = std::max(0, static_cast<int>(std::ceil(std::log2(norm / 0.25))));
  BigFloat scale = BigFloat::pow2(-s, prec);
  Matrix<BigComplex> t(n, n, BigComplex(prec));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) t(i, j) = m(i, j) * scale;

  Matrix<BigComplex> sum = Matrix<BigComplex>::identity(n, m.proto());
  Matrix<BigComplex> term = Matrix<BigComplex>::identity(n, m.proto());
  BigFloat stop = BigFloat::pow2(-static_cast<long>(prec) - 32, prec);
  const long max_terms = 8 * static_cast<long>(prec);
  for (long k = 1; k <= max_terms; ++k) {
    term = term * t;
    BigFloat invk = BigFloat::from_long(1, prec) / BigFloat::from_long(k, prec);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) term(i, j) = term(i, j) * invk;
    sum = sum + term;
    if (max_abs(term) < stop) break;
  }
  for (int k = 0; k < s; ++k) sum = sum * sum;
  return sum;
}

std::vector<BigComplex> charpoly(const Matrix<BigComplex>& m) {
  if (!m.is_square()) throw DimensionMismatchError();
  const size_t n = m.rows();
  const mpfr_prec_t prec = m.proto().prec();
  std::vector<BigComplex> c(n + 1, BigComplex(prec));
  c[n] = sc_one(m.proto());
  Matrix<BigComplex> acc = m;
  for (size_t k = 1; k <= n; ++k) {
    if (k > 1) {
      Matrix<BigComplex> shifted = acc;
      for (size_t i = 0; i < n; ++i) shifted(i, i) += c[n - k + 1];
      acc = m * shifted;
    }
    BigComplex tr(prec);
    for (size_t i = 0; i < n; ++i) tr += acc(i, i);
    BigFloat invk = BigFloat::from_long(1, prec) / BigFloat::from_long(static_cast<long>(k), prec);
    c[n - k] = -(tr * invk);
  }
  return c;
}

std::vector<BigComplex> polynomial_roots(const std::vector<BigComplex>& monic_ascending) {
  const int deg = static_cast<int>(monic_ascending.size()) - 1;
  if (deg <= 0) return {};
  const mpfr_prec_t base_prec = monic_ascending[0].prec();
  const mpfr_prec_t wprec = 2 * base_prec + 64;

  std::vector<BigComplex> c;
  c.reserve(monic_ascending.size());
  for (const auto& z : monic_ascending) c.push_back(z.at_prec(wprec));

  auto eval = [&](const BigComplex& x) {
    BigComplex acc = c[deg];
    for (int k = deg - 1; k >= 0; --k) acc = acc * x + c[k];
    return acc;
  };

  double radius = 1.0;
  for (int k = 0; k < deg; ++k) radius = std::max(radius, std::pow(std::abs(c[k].abs().to_double()), 1.0 / (deg - k)));
  radius *= 2.0;

  std::vector<BigComplex> w;
  w.reserve(deg);
  for (int j = 0; j < deg; ++j) {
    double th = 2.0 * 3.14159265358979323846 * j / deg + 0.4;
    w.push_back(BigComplex::from_double(radius * std::cos(th), radius * std::sin(th), wprec));
  }

  BigFloat stop = BigFloat::pow2(-static_cast<long>(wprec) + 24, wprec);
  const int max_iter = 4000;
  for (int it = 0; it < max_iter; ++it) {
    BigFloat max_step(wprec);
    for (int j = 0; j < deg; ++j) {
      BigComplex denom = BigComplex::from_long(1, wprec);
      for (int k = 0; k < deg; ++k) {
        if (k == j) continue;
        BigComplex d = w[j] - w[k];
        if (d.is_zero()) d = BigComplex::from_double(1e-20 * (j + 1), 1e-20, wprec);
        denom = denom * d;
      }
      BigComplex step = eval(w[j]) * denom.inverse();
      w[j] = w[j] - step;
      BigFloat s = step.abs();
      if (s > max_step) max_step = s;
    }
    if (max_step <= stop) break;
  }

  std::vector<BigComplex> out;
  out.reserve(deg);
  for (auto& z : w) out.push_back(z.at_prec(base_prec));
  return out;
}

std::vector<BigComplex> eigenvalues(const Matrix<BigComplex>& m) {
  return polynomial_roots(charpoly(m));
}

}  // namespace hyperorbit
