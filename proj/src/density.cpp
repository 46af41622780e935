#include "hyperorbit/density.hpp"

#include <algorithm>

namespace hyperorbit {

namespace {

bool all_zero_exact(const std::vector<ExactComplex>& v) {
  return std::all_of(v.begin(), v.end(), [](const ExactComplex& x) { return x.is_zero(); });
}

// 2*i*pi * x split into real/imaginary parts: Re = -2*pi*Im(x), Im = 2*pi*Re(x)
ExactComplex two_i_pi_times(const ExactComplex& x) {
  ExactReal two_pi = ExactReal(2) * ExactReal::pi();
  return {-(two_pi * x.im), two_pi * x.re};
}

}  // namespace

DensityInstance<ExactComplex> build_instance(const std::vector<AffineMap<ExactComplex>>& logs,
                                             const Matrix<ExactComplex>& p_mat,
                                             const BlockStructure& eta,
                                             const std::vector<ExactComplex>& w0,
                                             bool include_first_block) {
  DensityInstance<ExactComplex> inst;
  inst.n = static_cast<int>(w0.size());
  inst.p = static_cast<int>(logs.size());
  inst.r = eta.count();
  for (size_t k = 0; k < logs.size(); ++k) {
    std::vector<ExactComplex> u = logs[k](w0);
    std::string tag = "log_generator_" + std::to_string(k + 1);
    if (all_zero_exact(u)) tag += " (zero)";
    inst.vectors.push_back(std::move(u));
    inst.provenance.push_back(std::move(tag));
  }
  for (int k = include_first_block ? 0 : 1; k < eta.count(); ++k) {
    std::vector<ExactComplex> e(eta.order(), ExactComplex(0));
    e[eta.start(k)] = ExactComplex(1);
    std::vector<ExactComplex> pe = p_mat.apply(e);
    std::vector<ExactComplex> u(pe.begin() + 1, pe.end());
    // general split of 2*i*pi*x; a nonzero Re row (complex p2(P e^{(k)}))
    // departs from the purely-imaginary shape and is flagged
    bool complex_split = false;
    for (const auto& x : u) complex_split = complex_split || !x.im.is_zero();
    for (auto& x : u) x = two_i_pi_times(x);
    std::string tag = "lattice_e" + std::to_string(k + 1);
    if (all_zero_exact(u)) tag += " (zero)";
    if (complex_split) tag += " (complex split)";
    inst.vectors.push_back(std::move(u));
    inst.provenance.push_back(std::move(tag));
  }
  return inst;
}

DensityInstance<BigComplex> build_instance(const std::vector<LogGenerator>& logs,
                                           const NormalForm& nf, bool include_first_block) {
  const mpfr_prec_t prec = nf.P.proto().prec();
  DensityInstance<BigComplex> inst;
  inst.n = static_cast<int>(nf.w0.size());
  inst.p = static_cast<int>(logs.size());
  inst.r = nf.eta.count();
  BigFloat two_pi = BigFloat::from_long(2, prec) * BigFloat::pi(prec);
  for (size_t k = 0; k < logs.size(); ++k) {
    inst.vectors.push_back(logs[k].map(nf.w0));
    inst.provenance.push_back("log_generator_" + std::to_string(k + 1));
  }
  BigFloat split_tol = BigFloat::pow2(-static_cast<long>(prec) / 2, prec);
  for (int k = include_first_block ? 0 : 1; k < nf.eta.count(); ++k) {
    std::vector<BigComplex> pe = nf.P.apply(block_indicator(nf.eta, k, prec));
    std::vector<BigComplex> u(pe.size() - 1, BigComplex(prec));
    bool complex_split = false;
    for (size_t i = 1; i < pe.size(); ++i) {
      if (pe[i].im.abs() > split_tol) complex_split = true;
      u[i - 1] = BigComplex{-(two_pi * pe[i].im), two_pi * pe[i].re};
    }
    std::string tag = "lattice_e" + std::to_string(k + 1);
    if (complex_split) tag += " (complex split)";
    inst.vectors.push_back(std::move(u));
    inst.provenance.push_back(std::move(tag));
  }
  return inst;
}

std::optional<DensityVerdict> count_shortcut(int m, int n) {
  if (m > 2 * n) return std::nullopt;
  DensityVerdict v;
  v.status = DensityStatus::NotDense;
  v.certificate.type = Certificate::CountShortfall;
  v.certificate.m = m;
  v.certificate.needed = 2 * n + 1;
  v.backend = "exact";
  return v;
}

Matrix<ExactReal> real_embedding(const DensityInstance<ExactComplex>& inst) {
  Matrix<ExactReal> v(2 * inst.n, inst.m(), ExactReal(0));
  for (int k = 0; k < inst.m(); ++k)
    for (int i = 0; i < inst.n; ++i) {
      v(i, k) = inst.vectors[k][i].re;
      v(inst.n + i, k) = inst.vectors[k][i].im;
    }
  return v;
}

Matrix<BigFloat> real_embedding(const DensityInstance<BigComplex>& inst) {
  const mpfr_prec_t prec = inst.vectors.empty() || inst.vectors[0].empty()
                               ? 64
                               : inst.vectors[0][0].prec();
  Matrix<BigFloat> v(2 * inst.n, inst.m(), BigFloat(prec));
  for (int k = 0; k < inst.m(); ++k)
    for (int i = 0; i < inst.n; ++i) {
      v(i, k) = inst.vectors[k][i].re;
      v(inst.n + i, k) = inst.vectors[k][i].im;
    }
  return v;
}

std::vector<ExactReal> square_case_cofactors(const Matrix<ExactReal>& v) {
  const int m = static_cast<int>(v.cols());
  if (static_cast<int>(v.rows()) + 1 != m)
    throw std::invalid_argument("square case needs m = 2n+1 columns");
  std::vector<ExactReal> out;
  out.reserve(m);
  for (int k = 0; k < m; ++k) {
    Matrix<ExactReal> minor(v.rows(), v.cols() - 1, ExactReal(0));
    for (size_t i = 0; i < v.rows(); ++i) {
      int c = 0;
      for (int j = 0; j < m; ++j) {
        if (j == k) continue;
        minor(i, c++) = v(i, j);
      }
    }
    ExactReal det = exact_det(minor);
    out.push_back(k % 2 == 0 ? det : -det);
  }
  return out;
}

namespace {

// Stacks the monomial coordinates of every nullspace vector into a rational
// matrix; a rational s annihilates N^T iff M_Q s = 0.
Matrix<Rational> monomial_constraints(const std::vector<std::vector<ExactReal>>& nullspace, int m) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& nu : nullspace) {
    // clear denominators across the vector
    ExactPoly common = ExactPoly::constant(MultiquadElem(1));
    for (const auto& x : nu) common = common * x.den();
    std::vector<ExactReal> cleared;
    cleared.reserve(nu.size());
    int max_deg = 0;
    for (const auto& x : nu) {
      ExactReal y = x * ExactReal(common, ExactPoly::constant(MultiquadElem(1)));
      if (!y.is_polynomial()) throw std::logic_error("denominator clearing failed");
      max_deg = std::max(max_deg, y.num().degree());
      cleared.push_back(std::move(y));
    }
    // collect every monomial that appears
    std::map<MonomialKey, size_t> row_of;
    std::vector<std::map<MonomialKey, Rational>> coords;
    for (const auto& y : cleared) {
      coords.push_back(monomial_coords(y, 0, std::max(max_deg, 0)));
      for (const auto& [key, q] : coords.back())
        if (!row_of.count(key)) {
          row_of[key] = rows.size();
          rows.emplace_back(m, Rational(0));
        }
    }
    for (int k = 0; k < static_cast<int>(cleared.size()); ++k)
      for (const auto& [key, q] : coords[k]) rows[row_of[key]][k] = q;
  }
  Matrix<Rational> mq(rows.size(), m, Rational(0));
  for (size_t i = 0; i < rows.size(); ++i)
    for (int j = 0; j < m; ++j) mq(i, j) = rows[i][j];
  return mq;
}

}  // namespace

DensityVerdict waldschmidt_exact(const DensityInstance<ExactComplex>& inst) {
  const int n = inst.n, m = inst.m();
  DensityVerdict out;
  out.backend = "exact";

  Matrix<ExactReal> v = real_embedding(inst);
  RankNullspace<ExactReal> rn = exact_rank_nullspace(v);
  out.certificate.rank = rn.rank;
  out.certificate.required = 2 * n;

  if (rn.rank < 2 * n) {
    out.status = DensityStatus::NotDense;
    out.certificate.type = Certificate::ExactRankProof;
    return out;
  }

  Matrix<Rational> mq = monomial_constraints(rn.nullspace, m);
  RankNullspace<Rational> qn = exact_rank_nullspace(mq);
  out.certificate.mq_rank = qn.rank;
  if (qn.nullspace.empty()) {
    out.status = DensityStatus::Dense;
    out.certificate.type = Certificate::ExactRankProof;
    return out;
  }
  out.status = DensityStatus::NotDense;
  out.certificate.type = Certificate::IntegerRelation;
  out.certificate.relation = primitive_integer_vector(qn.nullspace.front());
  return out;
}

DensityVerdict waldschmidt_numeric(const DensityInstance<BigComplex>& inst,
                                   long max_relation_norm) {
  const int n = inst.n, m = inst.m();
  DensityVerdict out;
  out.backend = "numeric";
  Matrix<BigFloat> v = real_embedding(inst);
  const mpfr_prec_t prec = v.proto().prec();
  if (prec < 128) throw PrecisionTooLowError();

  const BigFloat rtol = BigFloat::pow2(-static_cast<long>(prec) / 2, prec);
  RankDecision rd = numeric_rank_decide(v, rtol);
  if (rd.ambiguous) {
    out.status = DensityStatus::Inconclusive;
    out.certificate.type = Certificate::NumericRankDeficiency;
    out.certificate.rank = rd.rank;
    out.certificate.required = 2 * n;
    return out;
  }

  Matrix<BigFloat> ns = numeric_nullspace(v, rtol);
  const int q = static_cast<int>(ns.cols());

  if (q > 0) {
    // lattice {(s, C N^T s)} with C = 2^{prec/2}
    BigFloat c = BigFloat::pow2(static_cast<long>(prec) / 2, prec);
    std::vector<std::vector<BigInt>> basis(m, std::vector<BigInt>(m + q, 0));
    for (int j = 0; j < m; ++j) {
      basis[j][j] = 1;
      for (int t = 0; t < q; ++t) basis[j][m + t] = (c * ns(j, t)).round_to_integer();
    }
    auto reduced = lll_reduce(std::move(basis));

    // the accept test reads the reduced vector in lattice coordinates: its
    // tail is C * N^T s, so a true relation shows a tail at rounding level
    // while pigeonhole near-misses keep a tail of order C^{1 - 1/q...} >> 1
    const BigFloat res_tol = BigFloat::pow2(-static_cast<long>(prec) / 4, prec);
    for (const auto& row : reduced) {
      std::vector<BigInt> s(row.begin(), row.begin() + m);
      bool nonzero = false;
      BigInt max_abs_s = 0;
      for (const auto& x : s) {
        if (x != 0) nonzero = true;
        BigInt a = x < 0 ? BigInt(-x) : x;
        if (a > max_abs_s) max_abs_s = a;
      }
      if (!nonzero || max_abs_s > max_relation_norm) continue;
      // scaled projection norm ||C N^T s|| from the stored nullspace
      BigFloat proj(prec);
      for (int t = 0; t < q; ++t) {
        BigFloat acc(prec);
        for (int j = 0; j < m; ++j)
          acc += ns(j, t) * BigFloat::from_rational(Rational(s[j]), prec);
        acc = acc * c;
        proj += acc * acc;
      }
      proj = proj.sqrt();
      if (proj <= res_tol) {
        out.status = DensityStatus::NotDense;
        out.certificate.type = Certificate::IntegerRelation;
        out.certificate.relation = std::move(s);
        return out;
      }
    }
  }

  out.certificate.rank = rd.rank;
  out.certificate.required = 2 * n;
  if (rd.rank == 2 * n) {
    out.status = DensityStatus::Dense;
    out.certificate.type = Certificate::LatticeConfidence;
    out.certificate.max_relation_norm = max_relation_norm;
  } else {
    out.status = DensityStatus::NotDense;
    out.certificate.type = Certificate::NumericRankDeficiency;
  }
  return out;
}

bool relation_certificate_sound(const DensityInstance<ExactComplex>& inst,
                                const std::vector<BigInt>& relation, unsigned seed) {
  const int n = inst.n, m = inst.m();
  if (static_cast<int>(relation.size()) != m) return false;
  Matrix<ExactReal> v = real_embedding(inst);
  Matrix<ExactReal> aug(2 * n + 1, m, ExactReal(0));
  aug.set_submatrix(0, 0, v);
  for (int k = 0; k < m; ++k) aug(2 * n, k) = ExactReal(Rational(relation[k]));
  return exact_rank_permuted(aug, seed) <= 2 * n;
}

}  // namespace hyperorbit
