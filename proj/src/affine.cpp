#include "hyperorbit/affine.hpp"

namespace hyperorbit {

AffineMap<ExactComplex> affine_inverse(const AffineMap<ExactComplex>& f) {
  Matrix<ExactComplex> ai = exact_inverse(f.linear);
  std::vector<ExactComplex> t = ai.apply(f.translation);
  for (auto& x : t) x = -x;
  return {std::move(ai), std::move(t)};
}

AffineMap<BigComplex> affine_inverse(const AffineMap<BigComplex>& f, const BigFloat& tol) {
  Matrix<BigComplex> ai = numeric_inverse(f.linear, tol);
  std::vector<BigComplex> t = ai.apply(f.translation);
  for (auto& x : t) x = -x;
  return {std::move(ai), std::move(t)};
}

namespace {

template <class T>
bool shapes_ok(const AffinePresentation<T>& g, ValidationReport& rep) {
  if (g.generators.empty()) {
    rep.ok = false;
    rep.issues.push_back({ValidationIssue::BadShape, -1, -1, "at least one generator required"});
    return false;
  }
  for (int k = 0; k < g.p(); ++k) {
    const auto& f = g.generators[k];
    if (!f.linear.is_square() || f.dim() != g.n ||
        static_cast<int>(f.linear.rows()) != g.n) {
      rep.ok = false;
      rep.issues.push_back({ValidationIssue::BadShape, k + 1, -1, "generator shape"});
      return false;
    }
  }
  if (g.log_generators && g.log_generators->size() != g.generators.size()) {
    rep.ok = false;
    rep.issues.push_back({ValidationIssue::BadShape, -1, -1, "log generator count"});
    return false;
  }
  return true;
}

}  // namespace

ValidationReport validate_presentation(const AffinePresentation<ExactComplex>& g, mpfr_prec_t prec) {
  ValidationReport rep;
  if (!shapes_ok(g, rep)) return rep;
  for (int k = 0; k < g.p(); ++k) {
    if (exact_det(g.generators[k].linear).is_zero()) {
      rep.ok = false;
      rep.issues.push_back({ValidationIssue::NotInvertible, k + 1, -1, "det(A)=0"});
    }
  }
  for (int j = 0; j < g.p(); ++j) {
    for (int k = j + 1; k < g.p(); ++k) {
      AffineMap<ExactComplex> fg = compose(g.generators[j], g.generators[k]);
      AffineMap<ExactComplex> gf = compose(g.generators[k], g.generators[j]);
      if (!(fg.linear == gf.linear && fg.translation == gf.translation)) {
        rep.ok = false;
        rep.issues.push_back({ValidationIssue::NotAbelian, j + 1, k + 1, ""});
      }
    }
  }
  if (g.log_generators) {
    // exp is transcendental: the log identity is checked numerically
    BigFloat tol = BigFloat::pow2(-static_cast<long>(prec) / 2, prec);
    for (int k = 0; k < g.p(); ++k) {
      Matrix<BigComplex> lhs =
          matrix_exp_numeric(to_numeric(psi_embed((*g.log_generators)[k]), prec));
      Matrix<BigComplex> rhs = to_numeric(phi_embed(g.generators[k]), prec);
      BigFloat res = max_abs_diff(lhs, rhs);
      rep.max_log_residual = std::max(rep.max_log_residual, res.to_double());
      if (res > tol) {
        rep.ok = false;
        rep.issues.push_back(
            {ValidationIssue::LogMismatch, k + 1, -1, "residual " + res.to_decimal_string(6)});
      }
    }
  }
  return rep;
}

ValidationReport validate_presentation(const AffinePresentation<BigComplex>& g) {
  ValidationReport rep;
  if (!shapes_ok(g, rep)) return rep;
  if (g.generators.empty()) return rep;
  const mpfr_prec_t prec = g.generators[0].linear.proto().prec();
  BigFloat tol = BigFloat::pow2(-static_cast<long>(prec) / 2, prec);

  for (int k = 0; k < g.p(); ++k) {
    try {
      (void)numeric_inverse(g.generators[k].linear, tol);
    } catch (const NumericSingularError&) {
      rep.ok = false;
      rep.issues.push_back({ValidationIssue::NotInvertible, k + 1, -1, "pivot below tolerance"});
    }
  }
  for (int j = 0; j < g.p(); ++j) {
    for (int k = j + 1; k < g.p(); ++k) {
      AffineMap<BigComplex> fg = compose(g.generators[j], g.generators[k]);
      AffineMap<BigComplex> gf = compose(g.generators[k], g.generators[j]);
      BigFloat res = max_abs_diff(phi_embed(fg), phi_embed(gf));
      // scale-aware commutativity tolerance
      BigFloat scale = BigFloat::from_long(1, prec) + max_abs(phi_embed(fg));
      rep.max_commutator_residual = std::max(rep.max_commutator_residual, res.to_double());
      if (res > tol * scale) {
        rep.ok = false;
        rep.issues.push_back({ValidationIssue::NotAbelian, j + 1, k + 1, ""});
      }
    }
  }
  if (g.log_generators) {
    for (int k = 0; k < g.p(); ++k) {
      Matrix<BigComplex> lhs = matrix_exp_numeric(psi_embed((*g.log_generators)[k]));
      Matrix<BigComplex> rhs = phi_embed(g.generators[k]);
      BigFloat res = max_abs_diff(lhs, rhs);
      rep.max_log_residual = std::max(rep.max_log_residual, res.to_double());
      if (res > tol) {
        rep.ok = false;
        rep.issues.push_back(
            {ValidationIssue::LogMismatch, k + 1, -1, "residual " + res.to_decimal_string(6)});
      }
    }
  }
  return rep;
}

namespace {

template <class T, class InverseFn>
std::vector<T> apply_word(const AffinePresentation<T>& g, const std::vector<long>& exponents,
                          const std::vector<T>& x, InverseFn&& inverse_of) {
  if (exponents.size() != g.generators.size()) throw DimensionMismatchError();
  std::vector<T> y = x;
  // abelian: apply right-to-left, repeated application per generator
  for (int k = g.p() - 1; k >= 0; --k) {
    long e = exponents[k];
    if (e == 0) continue;
    const AffineMap<T>* step = &g.generators[k];
    AffineMap<T> inv_map{Matrix<T>(), {}};
    if (e < 0) {
      inv_map = inverse_of(g.generators[k]);
      step = &inv_map;
      e = -e;
    }
    // square-and-multiply on the affine map
    AffineMap<T> base = *step;
    AffineMap<T> acc = AffineMap<T>::identity(g.n, base.linear.proto());
    while (e > 0) {
      if (e & 1) acc = compose(acc, base);
      e >>= 1;
      if (e) base = compose(base, base);
    }
    y = acc(y);
  }
  return y;
}

}  // namespace

std::vector<ExactComplex> apply_orbit_word(const AffinePresentation<ExactComplex>& g,
                                           const std::vector<long>& exponents,
                                           const std::vector<ExactComplex>& x) {
  return apply_word(g, exponents, x,
                    [](const AffineMap<ExactComplex>& f) { return affine_inverse(f); });
}

std::vector<BigComplex> apply_orbit_word(const AffinePresentation<BigComplex>& g,
                                         const std::vector<long>& exponents,
                                         const std::vector<BigComplex>& x) {
  const mpfr_prec_t prec = g.generators.empty() ? 64 : g.generators[0].linear.proto().prec();
  BigFloat tol = BigFloat::pow2(-static_cast<long>(prec) / 2, prec);
  return apply_word(g, exponents, x,
                    [&](const AffineMap<BigComplex>& f) { return affine_inverse(f, tol); });
}

template struct AffineMap<ExactComplex>;
template struct AffineMap<BigComplex>;

}  // namespace hyperorbit
