#include "hyperorbit/explog.hpp"

namespace hyperorbit {

namespace {

BigComplex diag_mean(const Matrix<BigComplex>& m) {
  const mpfr_prec_t prec = m.proto().prec();
  BigComplex tr(prec);
  for (size_t i = 0; i < m.rows(); ++i) tr += m(i, i);
  return tr * (BigFloat::from_long(1, prec) / BigFloat::from_long(static_cast<long>(m.rows()), prec));
}

}  // namespace

Matrix<BigComplex> block_exp(const Matrix<BigComplex>& n) {
  if (!n.is_square()) throw DimensionMismatchError();
  const size_t m = n.rows();
  const mpfr_prec_t prec = n.proto().prec();
  BigComplex mu = diag_mean(n);
  Matrix<BigComplex> l = n;
  for (size_t i = 0; i < m; ++i) l(i, i) -= mu;

  Matrix<BigComplex> sum = Matrix<BigComplex>::identity(m, n.proto());
  Matrix<BigComplex> term = Matrix<BigComplex>::identity(m, n.proto());
  for (size_t k = 1; k < m; ++k) {
    term = term * l;
    BigFloat invk = BigFloat::from_long(1, prec) / BigFloat::from_long(static_cast<long>(k), prec);
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) term(i, j) = term(i, j) * invk;
    sum = sum + term;
  }
  BigComplex emu = mu.exp();
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) sum(i, j) = sum(i, j) * emu;
  return sum;
}

Matrix<BigComplex> block_log(const Matrix<BigComplex>& m, bool force_zero_eigenvalue_log,
                             const BigFloat& tol) {
  if (!m.is_square()) throw DimensionMismatchError();
  const size_t order = m.rows();
  const mpfr_prec_t prec = m.proto().prec();
  BigComplex mu = diag_mean(m);
  if (mu.abs() <= tol) throw ZeroDiagonalError();
  const BigComplex one = BigComplex::from_long(1, prec);

  BigComplex lambda(prec);
  if (force_zero_eigenvalue_log) {
    if ((mu - one).abs() > tol)
      throw BranchFailureError("homogeneous block diagonal " + mu.to_string() + " is not 1");
    lambda = BigComplex(prec);  // branch pinned to 0
  } else {
    lambda = mu.log();  // principal: Im in (-pi, pi]
  }

  // unipotent offset U = M/mu - I is strictly lower triangular
  Matrix<BigComplex> u = m;
  BigComplex mu_inv = mu.inverse();
  for (size_t i = 0; i < order; ++i)
    for (size_t j = 0; j < order; ++j) u(i, j) = u(i, j) * mu_inv;
  for (size_t i = 0; i < order; ++i) u(i, i) -= one;

  Matrix<BigComplex> out(order, order, BigComplex(prec));
  for (size_t i = 0; i < order; ++i) out(i, i) = lambda;
  Matrix<BigComplex> pw = Matrix<BigComplex>::identity(order, m.proto());
  for (size_t k = 1; k < order; ++k) {
    pw = pw * u;
    BigFloat c = BigFloat::from_long(k % 2 == 1 ? 1 : -1, prec) /
                 BigFloat::from_long(static_cast<long>(k), prec);
    Matrix<BigComplex> scaled = pw;
    for (size_t i = 0; i < order; ++i)
      for (size_t j = 0; j < order; ++j) scaled(i, j) = scaled(i, j) * c;
    out = out + scaled;
  }
  return out;
}

namespace {

template <class Fn>
Matrix<BigComplex> blockwise(const Matrix<BigComplex>& m, const BlockStructure& eta, Fn&& fn) {
  if (eta.order() != static_cast<int>(m.rows())) throw DimensionMismatchError();
  Matrix<BigComplex> out(m.rows(), m.cols(), BigComplex(m.proto().prec()));
  for (int b = 0; b < eta.count(); ++b) {
    int s = eta.start(b), mb = eta.size(b);
    out.set_submatrix(s, s, fn(m.submatrix(s, s, mb, mb), b));
  }
  return out;
}

}  // namespace

Matrix<BigComplex> keta_exp(const Matrix<BigComplex>& n, const BlockStructure& eta) {
  return blockwise(n, eta, [](const Matrix<BigComplex>& blk, int) { return block_exp(blk); });
}

Matrix<BigComplex> keta_log(const Matrix<BigComplex>& m, const BlockStructure& eta,
                            int force_zero_block, const BigFloat& tol) {
  return blockwise(m, eta, [&](const Matrix<BigComplex>& blk, int b) {
    return block_log(blk, b == force_zero_block, tol);
  });
}

std::vector<LogGenerator> compute_log_generators(const NormalForm& nf,
                                                 const AffinePresentation<BigComplex>& g,
                                                 const NfOptions& opts) {
  const mpfr_prec_t prec = opts.prec;
  const BigFloat ctol = BigFloat::pow2(-opts.cluster_tol_exp(), prec);
  const BigFloat rtol = BigFloat::pow2(-opts.rank_tol_exp(), prec);

  std::vector<LogGenerator> out;
  out.reserve(g.generators.size());
  for (size_t k = 0; k < g.generators.size(); ++k) {
    Matrix<BigComplex> nprime = keta_log(nf.conjugated[k], nf.eta, /*force_zero_block=*/0, ctol);
    Matrix<BigComplex> nmat = nf.P * nprime * nf.P_inv;

    // F_{n+1} membership: the first row vanishes up to inversion rounding
    BigFloat first_row(prec);
    for (size_t j = 0; j < nmat.cols(); ++j) {
      BigFloat a = nmat(0, j).abs();
      if (a > first_row) first_row = a;
      nmat(0, j) = BigComplex(prec);
    }
    BigFloat scale = BigFloat::from_long(1, prec) + max_abs(nmat);
    if (first_row > rtol * scale)
      throw BranchFailureError("log left the zero-first-row space, residual " +
                               first_row.to_decimal_string(6));

    LogGenerator lg;
    lg.map = psi_unembed(nmat);
    lg.source_index = static_cast<int>(k);
    lg.branch_shifts.assign(nf.eta.count(), 0);  // principal branch throughout
    lg.residual = max_abs_diff(matrix_exp_numeric(nmat), phi_embed(g.generators[k]));
    if (lg.residual > rtol * scale * BigFloat::pow2(16, prec))
      throw ResidualTooLargeError("exp/log round trip residual " +
                                  lg.residual.to_decimal_string(6));
    out.push_back(std::move(lg));
  }
  return out;
}

G1Report verify_g1_decomposition(const std::vector<LogGenerator>& logs, const NormalForm& nf) {
  G1Report rep;
  if (logs.empty()) return rep;
  const mpfr_prec_t prec = logs[0].residual.prec();
  BigComplex two_i_pi{BigFloat(prec), BigFloat::from_long(2, prec) * BigFloat::pi(prec)};
  for (const auto& lg : logs) {
    Matrix<BigComplex> psi = psi_embed(lg.map);
    Matrix<BigComplex> shifted = psi;
    for (size_t i = 0; i < shifted.rows(); ++i) shifted(i, i) += two_i_pi;
    // shifted matrix has first row (2 i pi, 0, ...): outside F_{n+1}
    if (shifted(0, 0).abs() <= BigFloat::pow2(-static_cast<long>(prec) / 2, prec))
      rep.shifts_exit_f = false;
    BigFloat res = max_abs_diff(matrix_exp_numeric(shifted), matrix_exp_numeric(psi));
    rep.max_residual = std::max(rep.max_residual, res.to_double());
    BigFloat scale = BigFloat::from_long(1, prec) + max_abs(psi);
    if (res > BigFloat::pow2(-static_cast<long>(prec) / 2, prec) * scale) rep.exp_unchanged = false;
  }
  (void)nf;
  return rep;
}

}  // namespace hyperorbit
