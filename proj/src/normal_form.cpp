#include "hyperorbit/normal_form.hpp"

#include <algorithm>
#include <random>

namespace hyperorbit {

namespace {

Matrix<BigComplex> adjoint(const Matrix<BigComplex>& m) {
  Matrix<BigComplex> t = m.transpose();
  for (size_t i = 0; i < t.rows(); ++i)
    for (size_t j = 0; j < t.cols(); ++j) t(i, j) = t(i, j).conj();
  return t;
}

BigComplex trace_mean(const Matrix<BigComplex>& m) {
  BigComplex tr(m.proto().prec());
  for (size_t i = 0; i < m.rows(); ++i) tr += m(i, i);
  return tr * (BigFloat::from_long(1, m.proto().prec()) /
               BigFloat::from_long(static_cast<long>(m.rows()), m.proto().prec()));
}

Matrix<BigComplex> matrix_power(Matrix<BigComplex> base, int e) {
  Matrix<BigComplex> acc = Matrix<BigComplex>::identity(base.rows(), base.proto());
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

// Kernel basis with an absolute pivot threshold (the generalized-eigenspace
// split needs absolute scales; see the cluster analysis below).
Matrix<BigComplex> kernel_below(const Matrix<BigComplex>& m, const BigFloat& abs_thresh) {
  // reuse the pivoted QR route from numeric_nullspace by scaling: pivots of
  // m compared against abs_thresh directly via a relative call on m/t.
  // Simpler: compute nullspace with relative tol = abs_thresh / max_pivot.
  // A dedicated elimination keeps this self-contained.
  const mpfr_prec_t prec = m.proto().prec();
  const size_t rows = m.rows(), cols = m.cols();
  Matrix<BigComplex> a = m;
  std::vector<int> pivot_col_of_row;
  std::vector<bool> is_pivot(cols, false);
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t p = row;
    for (size_t i = row + 1; i < rows; ++i)
      if (a(i, col).abs() > a(p, col).abs()) p = i;
    if (a(p, col).abs() <= abs_thresh) continue;
    if (p != row)
      for (size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(row, j));
    BigComplex inv_piv = a(row, col).inverse();
    for (size_t j = col; j < cols; ++j) a(row, j) = a(row, j) * inv_piv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == row) continue;
      if (a(i, col).is_zero()) continue;
      BigComplex f = a(i, col);
      for (size_t j = col; j < cols; ++j) a(i, j) -= f * a(row, j);
    }
    is_pivot[col] = true;
    pivot_col_of_row.push_back(static_cast<int>(col));
    ++row;
  }
  size_t rank = pivot_col_of_row.size();
  Matrix<BigComplex> basis(cols, cols - rank, BigComplex(prec));
  size_t t = 0;
  for (size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    for (size_t rr = 0; rr < rank; ++rr) basis(pivot_col_of_row[rr], t) = -a(rr, fc);
    basis(fc, t) = BigComplex::from_long(1, prec);
    ++t;
  }
  return basis;
}

struct EigenCluster {
  BigComplex center;
  int multiplicity;
};

std::vector<EigenCluster> cluster_eigenvalues(const std::vector<BigComplex>& roots,
                                              const BigFloat& tol) {
  const size_t m = roots.size();
  std::vector<int> owner(m, -1);
  std::vector<EigenCluster> out;
  // transitive chaining: two roots within tol share a cluster
  std::vector<std::vector<size_t>> groups;
  for (size_t i = 0; i < m; ++i) {
    bool placed = false;
    for (auto& g : groups) {
      for (size_t j : g) {
        if ((roots[i] - roots[j]).abs() <= tol) {
          g.push_back(i);
          placed = true;
          break;
        }
      }
      if (placed) break;
    }
    if (!placed) groups.push_back({i});
  }
  const mpfr_prec_t prec = roots.empty() ? 64 : roots[0].prec();
  for (const auto& g : groups) {
    BigComplex c(prec);
    for (size_t j : g) c += roots[j];
    c = c * (BigFloat::from_long(1, prec) / BigFloat::from_long(static_cast<long>(g.size()), prec));
    out.push_back({c, static_cast<int>(g.size())});
  }
  return out;
}

struct SubBlock {
  Matrix<BigComplex> basis;  // coordinates inside the parent block
  BigComplex eigenvalue;     // of the splitting generator on this sub-block
};

// Splits one restriction matrix into generalized eigenspaces.
std::vector<SubBlock> split_by_matrix(const Matrix<BigComplex>& r, const NfOptions& opts) {
  const int m = static_cast<int>(r.rows());
  const mpfr_prec_t prec = r.proto().prec();
  const BigFloat ctol = BigFloat::pow2(-opts.cluster_tol_exp(), prec);
  BigFloat scale = BigFloat::from_long(1, prec);
  if (frobenius_norm(r) > scale) scale = frobenius_norm(r);

  if (m == 1) return {{Matrix<BigComplex>::identity(1, r.proto()), r(0, 0)}};

  // single-eigenvalue pretest: is r - (tr/m) I nilpotent up to noise?
  BigComplex mean = trace_mean(r);
  Matrix<BigComplex> d = r;
  for (int i = 0; i < m; ++i) d(i, i) -= mean;
  Matrix<BigComplex> dm = matrix_power(d, m);
  BigFloat nil_thresh = ctol * BigFloat::pow2(m + 6, prec);
  for (int k = 1; k < m; ++k) nil_thresh = nil_thresh * scale;
  if (frobenius_norm(dm) <= nil_thresh)
    return {{Matrix<BigComplex>::identity(m, r.proto()), mean}};

  std::vector<BigComplex> roots = eigenvalues(r);
  std::vector<EigenCluster> clusters = cluster_eigenvalues(roots, ctol);
  if (clusters.size() == 1)
    return {{Matrix<BigComplex>::identity(m, r.proto()), clusters[0].center}};

  std::vector<SubBlock> out;
  int total = 0;
  for (const auto& cl : clusters) {
    Matrix<BigComplex> shifted = r;
    for (int i = 0; i < m; ++i) shifted(i, i) -= cl.center;
    Matrix<BigComplex> pw = matrix_power(shifted, cl.multiplicity);
    BigFloat thresh = ctol * BigFloat::pow2(cl.multiplicity + 6, prec) *
                      BigFloat::from_long(cl.multiplicity, prec);
    for (int k = 1; k < cl.multiplicity; ++k) thresh = thresh * scale;
    Matrix<BigComplex> ker = kernel_below(pw, thresh);
    if (static_cast<int>(ker.cols()) != cl.multiplicity) {
      double gap = 0;
      for (size_t i = 0; i < clusters.size(); ++i)
        for (size_t j = i + 1; j < clusters.size(); ++j) {
          double g = (clusters[i].center - clusters[j].center).abs().to_double();
          if (gap == 0 || g < gap) gap = g;
        }
      throw EigenSplitFailure(gap);
    }
    out.push_back({orthonormal_columns(ker), cl.center});
    total += cl.multiplicity;
  }
  if (total != m) throw EigenSplitFailure(0);
  return out;
}

// Unitary with first column v (assumes ||v|| = 1).
Matrix<BigComplex> unitary_with_first_column(const std::vector<BigComplex>& v) {
  const int m = static_cast<int>(v.size());
  const mpfr_prec_t prec = v[0].prec();
  // Householder H with H v = alpha e1, |alpha| = 1; then H e1 = conj(alpha) v
  std::vector<BigComplex> u = v;
  BigComplex alpha = BigComplex::from_long(-1, prec);
  if (!v[0].is_zero()) alpha = -(v[0] * (BigFloat::from_long(1, prec) / v[0].abs()));
  u[0] -= alpha;
  BigFloat unorm2(prec);
  for (const auto& ui : u) {
    BigFloat a = ui.abs();
    unorm2 += a * a;
  }
  Matrix<BigComplex> h = Matrix<BigComplex>::identity(m, v[0]);
  if (!unorm2.is_zero()) {
    BigFloat f = BigFloat::from_long(2, prec) / unorm2;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) h(i, j) -= (u[i] * u[j].conj()) * f;
  }
  // H maps v -> -alpha...; recompute: H v = alpha e1 with the sign choice above.
  // First column of M = H * diag(alpha, 1, ..., 1) is H(alpha e1) = alpha * (conj(alpha) v) = v.
  Matrix<BigComplex> mcol = h;
  for (int i = 0; i < m; ++i) mcol(i, 0) = mcol(i, 0) * alpha;
  return mcol;
}

// Simultaneous upper triangularization of commuting single-eigenvalue
// restrictions by common-eigenvector deflation; returns the unitary U.
Matrix<BigComplex> upper_triangularize(std::vector<Matrix<BigComplex>> rs, const NfOptions& opts) {
  const int m = static_cast<int>(rs[0].rows());
  const mpfr_prec_t prec = rs[0].proto().prec();
  if (m == 1) return Matrix<BigComplex>::identity(1, rs[0].proto());

  // common eigenvector: intersection of the kernels of (R_k - l_k I)
  Matrix<BigComplex> stacked(rs.size() * m, m, BigComplex(prec));
  for (size_t k = 0; k < rs.size(); ++k) {
    Matrix<BigComplex> d = rs[k];
    BigComplex lk = trace_mean(rs[k]);
    for (int i = 0; i < m; ++i) d(i, i) -= lk;
    stacked.set_submatrix(k * m, 0, d);
  }
  BigFloat rtol = BigFloat::pow2(-opts.rank_tol_exp(), prec);
  Matrix<BigComplex> ker = numeric_nullspace(stacked, rtol);
  std::vector<BigComplex> v(m, BigComplex(prec));
  if (ker.cols() == 0) {
    // fall back to the least-significant pivot direction: relax the rank
    // threshold until one direction appears (caught a posteriori by the
    // conjugation residual if spurious)
    BigFloat relaxed = rtol;
    for (int attempt = 0; attempt < 8 && ker.cols() == 0; ++attempt) {
      relaxed = relaxed * BigFloat::pow2(opts.rank_tol_exp() / 8, prec);
      ker = numeric_nullspace(stacked, relaxed);
    }
    if (ker.cols() == 0) throw EigenSplitFailure(0);
  }
  for (int i = 0; i < m; ++i) v[i] = ker(i, 0);

  Matrix<BigComplex> u1 = unitary_with_first_column(v);
  Matrix<BigComplex> u1h = adjoint(u1);
  std::vector<Matrix<BigComplex>> sub;
  sub.reserve(rs.size());
  for (auto& r : rs) {
    Matrix<BigComplex> t = u1h * r * u1;
    sub.push_back(t.submatrix(1, 1, m - 1, m - 1));
  }
  Matrix<BigComplex> usub = upper_triangularize(std::move(sub), opts);
  Matrix<BigComplex> u = Matrix<BigComplex>::identity(m, rs[0].proto());
  u.set_submatrix(1, 1, usub);
  return u1 * u;
}


// Force the exact K_{eta,r} shape: zeros outside the blocks and above the
// block diagonals, constant diagonal per block (the mean). Returns the max
// deviation introduced.
BigFloat snap_to_structure(Matrix<BigComplex>& m, const BlockStructure& eta) {
  const mpfr_prec_t prec = m.proto().prec();
  BigFloat dev(prec);
  const int n = static_cast<int>(m.rows());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      // block membership
      int bi = -1, bj = -1;
      for (int b = 0; b < eta.count(); ++b) {
        int s = eta.start(b), e = s + eta.size(b);
        if (i >= s && i < e) bi = b;
        if (j >= s && j < e) bj = b;
      }
      bool keep = (bi == bj) && (j <= i);
      if (!keep) {
        BigFloat d = m(i, j).abs();
        if (d > dev) dev = d;
        m(i, j) = BigComplex(prec);
      }
    }
  for (int b = 0; b < eta.count(); ++b) {
    int s = eta.start(b), mb = eta.size(b);
    BigComplex mean(prec);
    for (int i = 0; i < mb; ++i) mean += m(s + i, s + i);
    mean = mean * (BigFloat::from_long(1, prec) / BigFloat::from_long(mb, prec));
    for (int i = 0; i < mb; ++i) {
      BigFloat d = (m(s + i, s + i) - mean).abs();
      if (d > dev) dev = d;
      m(s + i, s + i) = mean;
    }
  }
  return dev;
}

Matrix<BigComplex> reversal(int m, mpfr_prec_t prec) {
  Matrix<BigComplex> j(m, m, BigComplex(prec));
  for (int i = 0; i < m; ++i) j(i, m - 1 - i) = BigComplex::from_long(1, prec);
  return j;
}

}  // namespace

std::vector<BigComplex> partition_u0(const BlockStructure& eta, mpfr_prec_t prec) {
  std::vector<BigComplex> u0(eta.order(), BigComplex(prec));
  for (int k = 0; k < eta.count(); ++k) u0[eta.start(k)] = BigComplex::from_long(1, prec);
  return u0;
}

std::vector<BigComplex> block_indicator(const BlockStructure& eta, int k, mpfr_prec_t prec) {
  std::vector<BigComplex> e(eta.order(), BigComplex(prec));
  e[eta.start(k)] = BigComplex::from_long(1, prec);
  return e;
}

LinearNormalForm linear_normal_form(const std::vector<Matrix<BigComplex>>& linear_parts,
                                    const NfOptions& opts) {
  if (linear_parts.empty()) throw std::invalid_argument("no linear parts");
  const size_t n = linear_parts[0].rows();
  const mpfr_prec_t prec = opts.prec;

  // refine common blocks generator by generator
  std::vector<Matrix<BigComplex>> blocks = {
      Matrix<BigComplex>::identity(n, BigComplex(prec))};
  for (const auto& a : linear_parts) {
    if (a.rows() != n || !a.is_square()) throw DimensionMismatchError();
    std::vector<Matrix<BigComplex>> next;
    for (const auto& v : blocks) {
      Matrix<BigComplex> r = adjoint(v) * a * v;  // restriction (v orthonormal)
      auto subs = split_by_matrix(r, opts);
      if (subs.size() == 1) {
        next.push_back(v);
      } else {
        for (auto& s : subs) next.push_back(orthonormal_columns(v * s.basis));
      }
    }
    blocks = std::move(next);
  }

  // triangularize inside each common block and assemble Q
  LinearNormalForm out;
  std::vector<int> sizes;
  out.Q = Matrix<BigComplex>(n, n, BigComplex(prec));
  out.eigenvalue_table.assign(linear_parts.size(), {});
  size_t col = 0;
  for (const auto& v : blocks) {
    const int m = static_cast<int>(v.cols());
    std::vector<Matrix<BigComplex>> rs;
    rs.reserve(linear_parts.size());
    for (const auto& a : linear_parts) rs.push_back(adjoint(v) * a * v);
    Matrix<BigComplex> u = upper_triangularize(rs, opts);
    Matrix<BigComplex> basis = v * (u * reversal(m, prec));  // lower-triangular order
    out.Q.set_submatrix(0, col, basis);
    for (size_t k = 0; k < linear_parts.size(); ++k)
      out.eigenvalue_table[k].push_back(trace_mean(rs[k]));
    sizes.push_back(m);
    col += m;
  }
  out.eta = BlockStructure(sizes);

  // a-posteriori conjugation residual: deviation from the snapped shape
  BigFloat tol = BigFloat::pow2(-opts.rank_tol_exp(), prec);
  Matrix<BigComplex> qinv = numeric_inverse(out.Q, tol);
  out.residual = BigFloat(prec);
  for (const auto& a : linear_parts) {
    Matrix<BigComplex> c = qinv * a * out.Q;
    BigFloat dev = snap_to_structure(c, out.eta);
    if (dev > out.residual) out.residual = dev;
  }
  return out;
}

std::vector<long> separating_element_search(
    const std::vector<std::vector<BigComplex>>& eigenvalue_table, const std::vector<bool>& in_j,
    const NfOptions& opts) {
  const size_t p = eigenvalue_table.size();
  const size_t nblocks = in_j.size();
  const mpfr_prec_t prec = opts.prec;
  const BigFloat ctol = BigFloat::pow2(-opts.cluster_tol_exp(), prec);
  const BigComplex one = BigComplex::from_long(1, prec);

  auto word_separates = [&](const std::vector<long>& w) {
    for (size_t b = 0; b < nblocks; ++b) {
      if (in_j[b]) continue;
      BigComplex prod = one;
      for (size_t k = 0; k < p; ++k) {
        long e = w[k];
        BigComplex base = eigenvalue_table[k][b];
        if (e < 0) {
          base = base.inverse();
          e = -e;
        }
        for (long t = 0; t < e; ++t) prod = prod * base;
      }
      if ((prod - one).abs() <= ctol) return false;
    }
    return true;
  };

  // single generators first
  for (size_t k = 0; k < p; ++k) {
    std::vector<long> w(p, 0);
    w[k] = 1;
    if (word_separates(w)) return w;
  }
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<long> e(-3, 3);
  for (int t = 0; t < opts.separating_budget; ++t) {
    std::vector<long> w(p, 0);
    bool nonzero = false;
    for (size_t k = 0; k < p; ++k) {
      w[k] = e(rng);
      nonzero |= w[k] != 0;
    }
    if (!nonzero) continue;
    if (word_separates(w)) return w;
  }
  throw NoSeparatingElementError();
}

namespace {

Matrix<BigComplex> embed_linear_block(const Matrix<BigComplex>& q, mpfr_prec_t prec) {
  const int n = static_cast<int>(q.rows());
  Matrix<BigComplex> p(n + 1, n + 1, BigComplex(prec));
  p(0, 0) = BigComplex::from_long(1, prec);
  p.set_submatrix(1, 1, q);
  return p;
}

}  // namespace

NormalForm affine_normal_form(const AffinePresentation<BigComplex>& g, const NfOptions& opts) {
  const int n = g.n;
  const mpfr_prec_t prec = opts.prec;
  const BigFloat ctol = BigFloat::pow2(-opts.cluster_tol_exp(), prec);
  const BigFloat rtol = BigFloat::pow2(-opts.rank_tol_exp(), prec);

  std::vector<Matrix<BigComplex>> linear_parts;
  linear_parts.reserve(g.generators.size());
  for (const auto& f : g.generators) linear_parts.push_back(f.linear);
  LinearNormalForm lnf = linear_normal_form(linear_parts, opts);

  // J: blocks on which every generator has eigenvalue 1
  const int rp = lnf.eta.count();
  std::vector<bool> in_j(rp, true);
  const BigComplex one = BigComplex::from_long(1, prec);
  for (int b = 0; b < rp; ++b)
    for (size_t k = 0; k < linear_parts.size(); ++k)
      if ((lnf.eigenvalue_table[k][b] - one).abs() > ctol) {
        in_j[b] = false;
        break;
      }

  // reorder blocks so J comes first
  std::vector<int> order;
  for (int b = 0; b < rp; ++b)
    if (in_j[b]) order.push_back(b);
  const int s = static_cast<int>(order.size());
  for (int b = 0; b < rp; ++b)
    if (!in_j[b]) order.push_back(b);
  Matrix<BigComplex> q(n, n, BigComplex(prec));
  std::vector<int> sizes;
  std::vector<std::vector<BigComplex>> eigtable(linear_parts.size());
  {
    int col = 0;
    for (int idx : order) {
      int sb = lnf.eta.start(idx), mb = lnf.eta.size(idx);
      q.set_submatrix(0, col, lnf.Q.submatrix(0, sb, n, mb));
      for (size_t k = 0; k < linear_parts.size(); ++k)
        eigtable[k].push_back(lnf.eigenvalue_table[k][idx]);
      sizes.push_back(mb);
      col += mb;
    }
  }
  std::vector<bool> in_j_sorted(rp);
  for (int b = 0; b < rp; ++b) in_j_sorted[b] = b < s;

  NormalForm out;
  if (s > 0) {
    // Case 1
    out.case_tag = 1;
    int p_dim = 0;
    for (int b = 0; b < s; ++b) p_dim += sizes[b];
    Matrix<BigComplex> p1 = embed_linear_block(q, prec);
    Matrix<BigComplex> p1_inv = embed_linear_block(numeric_inverse(q, rtol), prec);

    std::vector<int> eta_sizes = {p_dim + 1};
    for (int b = s; b < rp; ++b) eta_sizes.push_back(sizes[b]);
    BlockStructure eta(eta_sizes);

    // Does P1 alone already conjugate into the block form? It does exactly
    // when every conjugated translation vanishes on the non-unit blocks.
    bool shortcut = true;
    BigFloat scale = BigFloat::from_long(1, prec);
    for (const auto& f : g.generators) {
      Matrix<BigComplex> c = p1_inv * phi_embed(f) * p1;
      if (max_abs(c) > scale) scale = max_abs(c);
      for (int i = p_dim + 1; i < n + 1; ++i)
        if (c(i, 0).abs() > rtol * scale) shortcut = false;
    }

    if (shortcut || p_dim == n) {
      out.P = p1;
      out.P_inv = p1_inv;
    } else {
      out.separating_word =
          separating_element_search(eigtable, in_j_sorted, opts);
      // Phi(f0) as the word product
      Matrix<BigComplex> f0 = Matrix<BigComplex>::identity(n + 1, BigComplex(prec));
      for (size_t k = 0; k < g.generators.size(); ++k) {
        long e = out.separating_word[k];
        if (e == 0) continue;
        Matrix<BigComplex> base = phi_embed(g.generators[k]);
        if (e < 0) {
          base = numeric_inverse(base, rtol);
          e = -e;
        }
        f0 = f0 * matrix_power(base, static_cast<int>(e));
      }
      Matrix<BigComplex> m0 = p1_inv * f0 * p1;
      const int h_dim = n - p_dim;
      Matrix<BigComplex> b2m = m0.submatrix(p_dim + 1, p_dim + 1, h_dim, h_dim);
      Matrix<BigComplex> p2 = Matrix<BigComplex>::identity(n + 1, BigComplex(prec));
      for (int i = 0; i < h_dim; ++i) {
        p2(p_dim + 1 + i, 0) = m0(p_dim + 1 + i, 0);  // b2
        for (int j = 0; j < h_dim; ++j) p2(p_dim + 1 + i, p_dim + 1 + j) = b2m(i, j);
        p2(p_dim + 1 + i, p_dim + 1 + i) -= one;  // B2 - I
      }
      out.P = p1 * numeric_inverse(p2, rtol);
      out.P_inv = p2 * p1_inv;
    }
    out.eta = eta;
    out.r = rp - s + 1;
  } else {
    // Case 2: common fixed point v1 with f(v1) = v1 for all generators
    out.case_tag = 2;
    Matrix<BigComplex> stacked(g.generators.size() * n, n, BigComplex(prec));
    std::vector<BigComplex> rhs(g.generators.size() * n, BigComplex(prec));
    for (size_t k = 0; k < g.generators.size(); ++k) {
      Matrix<BigComplex> d = g.generators[k].linear;
      for (int i = 0; i < n; ++i) d(i, i) -= one;
      stacked.set_submatrix(k * n, 0, d);
      for (int i = 0; i < n; ++i) rhs[k * n + i] = -g.generators[k].translation[i];
    }
    std::vector<BigComplex> v1 = least_squares(stacked, rhs);
    // residual check
    BigFloat res(prec);
    std::vector<BigComplex> got = stacked.apply(v1);
    for (size_t i = 0; i < got.size(); ++i) {
      BigFloat d = (got[i] - rhs[i]).abs();
      if (d > res) res = d;
    }
    BigFloat scale = BigFloat::from_long(1, prec);
    for (const auto& x : v1) {
      BigFloat a = x.abs();
      if (a > scale) scale = a;
    }
    if (res > rtol * scale * BigFloat::pow2(16, prec))
      throw FixedPointSolveFailure(res.to_double());

    Matrix<BigComplex> p(n + 1, n + 1, BigComplex(prec));
    p(0, 0) = one;
    for (int i = 0; i < n; ++i) p(i + 1, 0) = v1[i];
    p.set_submatrix(1, 1, q);
    out.P = p;
    out.P_inv = numeric_inverse(p, rtol);
    std::vector<int> eta_sizes = {1};
    for (int b = 0; b < rp; ++b) eta_sizes.push_back(sizes[b]);
    out.eta = BlockStructure(eta_sizes);
    out.r = rp + 1;
  }

  // conjugate, snap, and verify
  out.residual = BigFloat(prec);
  for (const auto& f : g.generators) {
    Matrix<BigComplex> c = out.P_inv * phi_embed(f) * out.P;
    BigFloat dev = snap_to_structure(c, out.eta);
    if (dev > out.residual) out.residual = dev;
    out.conjugated.push_back(std::move(c));
  }
  BigFloat allowed = rtol * BigFloat::pow2(24, prec);
  {
    BigFloat scale = BigFloat::from_long(1, prec);
    for (const auto& c : out.conjugated)
      if (max_abs(c) > scale) scale = max_abs(c);
    if (out.residual > allowed * scale)
      throw ResidualTooLargeError("conjugation residual " + out.residual.to_decimal_string(6));
  }
  // first block diagonal must be the homogeneous 1
  for (auto& c : out.conjugated) {
    if ((c(0, 0) - one).abs() > ctol)
      throw ResidualTooLargeError("first block diagonal differs from 1");
    for (int i = 0; i < out.eta.size(0); ++i) c(i, i) = one;
  }

  out.u0 = partition_u0(out.eta, prec);
  out.v0 = out.P.apply(out.u0);
  // v0 in {1} x C^n holds by the first-row structure of P
  out.w0.assign(out.v0.begin() + 1, out.v0.end());
  return out;
}

}  // namespace hyperorbit
