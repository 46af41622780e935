#include "hyperorbit/pipeline.hpp"

#include <cstdio>

namespace hyperorbit {

namespace {

using nlohmann::json;

std::string note_for_dense(const BlockStructure& eta) {
  // Blocks beyond the homogeneous one contribute a nonzero-coordinate
  // condition: points whose conjugated homogeneous coordinates are nonzero
  // at these indices have dense orbits as well.
  std::string idx;
  for (int k = 1; k < eta.count(); ++k) {
    if (!idx.empty()) idx += ", ";
    idx += std::to_string(eta.start(k));  // 1-based in C^n after dropping coord 0
  }
  if (idx.empty())
    return "orbit of w0 is dense; the group is hypercyclic";
  return "orbit of w0 is dense; every orbit through points with nonzero conjugated "
         "coordinate(s) {" +
         idx + "} (1-based, in C^n) is dense";
}

void fill_witness_numeric(HypercyclicityReport& rep, const std::vector<BigComplex>& w0) {
  for (const auto& z : w0) {
    rep.witness_w0.push_back(z.re.to_hex_string() + " " + z.im.to_hex_string());
    rep.witness_approx.push_back({z.re.to_double(), z.im.to_double()});
  }
}

void fill_witness_exact(HypercyclicityReport& rep, const std::vector<ExactComplex>& w0,
                        mpfr_prec_t prec) {
  json arr = json::array();
  for (const auto& z : w0) {
    rep.witness_w0.push_back(z.to_string());
    BigComplex nz = to_numeric(z, prec);
    rep.witness_approx.push_back({nz.re.to_double(), nz.im.to_double()});
    arr.push_back(json{{"re", exact_real_to_json(z.re)}, {"im", exact_real_to_json(z.im)}});
  }
  rep.witness_exact = arr;
}

void apply_density_verdict(HypercyclicityReport& rep, DensityVerdict v) {
  rep.density = std::move(v);
  switch (rep.density.status) {
    case DensityStatus::Dense:
      rep.verdict = Hypercyclicity::Hypercyclic;
      break;
    case DensityStatus::NotDense:
      rep.verdict = Hypercyclicity::NotHypercyclic;
      break;
    default:
      rep.verdict = Hypercyclicity::Inconclusive;
      break;
  }
}

}  // namespace

HypercyclicityReport decide_hypercyclic(const PresentationSource& src, const RunConfig& cfg) {
  HypercyclicityReport rep;
  rep.config = cfg;

  AffinePresentation<BigComplex> numeric = src.realize_numeric(cfg.prec);
  rep.validation = validate_presentation(numeric);
  if (!rep.validation.ok) {
    rep.verdict = Hypercyclicity::ValidationFailed;
    rep.stage_error = {{"validate", "presentation failed validation"}};
    return rep;
  }
  rep.max_log_residual = rep.validation.max_log_residual;

  PresentationSource::ExactPieces pieces = src.realize_exact();
  bool exact_ok = pieces.full_exact_pipeline();
  bool use_exact;
  if (cfg.backend == "exact") {
    if (!exact_ok) {
      rep.verdict = Hypercyclicity::ValidationFailed;
      rep.stage_error = {{"backend",
                          "exact backend requires exact log_generators plus the P/eta hint"}};
      return rep;
    }
    use_exact = true;
  } else if (cfg.backend == "numeric") {
    use_exact = false;
  } else {
    use_exact = exact_ok;
  }
  rep.backend_used = use_exact ? "exact" : "numeric";

  // Corollary shortcut needs no normal form: p <= n forces m = p+r-1 <= 2n.
  if (src.p() <= src.n) {
    DensityVerdict v;
    v.status = DensityStatus::NotDense;
    v.certificate.type = Certificate::CountShortfall;
    v.certificate.m = src.hint_eta ? src.p() + static_cast<int>(src.hint_eta->size()) - 1 : -1;
    v.certificate.needed = 2 * src.n + 1;
    v.backend = rep.backend_used;
    apply_density_verdict(rep, std::move(v));
    rep.note = "p <= n: no abelian group generated by n affine maps on C^n has a dense orbit";
    return rep;
  }

  try {
    if (use_exact) {
      const Matrix<ExactComplex>& p_exact = *pieces.P;
      BlockStructure eta = *pieces.eta;
      rep.eta = eta.sizes();
      rep.r = eta.count();

      // hint sanity: first row (1, 0, ..., 0) exactly
      for (int j = 0; j <= src.n; ++j) {
        ExactComplex want = j == 0 ? ExactComplex(1) : ExactComplex(0);
        if (!(p_exact(0, j) == want))
          throw ResidualTooLargeError("P hint first row is not (1, 0, ..., 0)");
      }
      // structural check of the hint at working precision
      {
        Matrix<BigComplex> pn = to_numeric(p_exact, cfg.prec);
        BigFloat tol = BigFloat::pow2(-static_cast<long>(cfg.prec) / 2, cfg.prec);
        Matrix<BigComplex> pinv = numeric_inverse(pn, tol);
        BigFloat worst(cfg.prec);
        for (const auto& f : numeric.generators) {
          Matrix<BigComplex> c = pinv * phi_embed(f) * pn;
          if (!is_block_lower_triangular(c, eta, tol * BigFloat::pow2(24, cfg.prec)))
            throw ResidualTooLargeError("P/eta hint does not conjugate into the block form");
          // off-structure deviation of the conjugate
          for (int bi = 0; bi < eta.count(); ++bi)
            for (size_t i = 0; i < c.rows(); ++i)
              for (size_t jj = 0; jj < c.cols(); ++jj) {
                int s = eta.start(bi), e = s + eta.size(bi);
                bool row_in = static_cast<int>(i) >= s && static_cast<int>(i) < e;
                bool col_in = static_cast<int>(jj) >= s && static_cast<int>(jj) < e;
                if (col_in && (!row_in || static_cast<int>(jj) > static_cast<int>(i))) {
                  BigFloat d = c(i, jj).abs();
                  if (d > worst) worst = d;
                }
              }
        }
        rep.normal_form_residual = worst.to_double();
      }

      std::vector<ExactComplex> u0(src.n + 1, ExactComplex(0));
      for (int k = 0; k < eta.count(); ++k) u0[eta.start(k)] = ExactComplex(1);
      std::vector<ExactComplex> v0 = p_exact.apply(u0);
      std::vector<ExactComplex> w0(v0.begin() + 1, v0.end());

      DensityInstance<ExactComplex> inst =
          build_instance(*pieces.log_generators, p_exact, eta, w0, cfg.include_first_block);
      rep.m = inst.m();
      fill_witness_exact(rep, w0, cfg.prec);

      if (auto shortcut = count_shortcut(inst.m(), inst.n)) {
        apply_density_verdict(rep, std::move(*shortcut));
        return rep;
      }
      apply_density_verdict(rep, waldschmidt_exact(inst));
      if (rep.verdict == Hypercyclicity::Hypercyclic) rep.note = note_for_dense(eta);
      return rep;
    }

    // numeric pipeline
    NfOptions opts;
    opts.prec = cfg.prec;
    opts.seed = cfg.seed;
    NormalForm nf = affine_normal_form(numeric, opts);
    rep.eta = nf.eta.sizes();
    rep.r = nf.r;
    rep.normal_form_residual = nf.residual.to_double();
    if (src.log_generators && !use_exact)
      rep.note = "user log_generators verified but recomputed for the numeric pipeline; ";

    std::vector<LogGenerator> logs = compute_log_generators(nf, numeric, opts);
    for (const auto& lg : logs)
      rep.max_log_residual = std::max(rep.max_log_residual, lg.residual.to_double());

    DensityInstance<BigComplex> inst = build_instance(logs, nf, cfg.include_first_block);
    rep.m = inst.m();
    fill_witness_numeric(rep, nf.w0);

    if (auto shortcut = count_shortcut(inst.m(), inst.n)) {
      shortcut->backend = "numeric";
      apply_density_verdict(rep, std::move(*shortcut));
      return rep;
    }
    apply_density_verdict(rep, waldschmidt_numeric(inst, cfg.max_relation_norm));
    if (rep.verdict == Hypercyclicity::Hypercyclic) rep.note += note_for_dense(nf.eta);
    return rep;
  } catch (const EigenSplitFailure& e) {
    rep.stage_error = {{"normal-form", e.what()}};
  } catch (const NoSeparatingElementError& e) {
    rep.stage_error = {{"normal-form", e.what()}};
  } catch (const FixedPointSolveFailure& e) {
    rep.stage_error = {{"normal-form", e.what()}};
  } catch (const ResidualTooLargeError& e) {
    rep.stage_error = {{"normal-form", e.what()}};
  } catch (const BranchFailureError& e) {
    rep.stage_error = {{"logs", e.what()}};
  } catch (const ZeroDiagonalError& e) {
    rep.stage_error = {{"logs", e.what()}};
  } catch (const PrecisionTooLowError& e) {
    rep.stage_error = {{"density", e.what()}};
  } catch (const NumericSingularError& e) {
    rep.stage_error = {{"linalg", e.what()}};
  }
  rep.verdict = Hypercyclicity::Inconclusive;
  return rep;
}

std::string hypercyclicity_name(Hypercyclicity v) {
  switch (v) {
    case Hypercyclicity::Hypercyclic:
      return "HYPERCYCLIC";
    case Hypercyclicity::NotHypercyclic:
      return "NOT_HYPERCYCLIC";
    case Hypercyclicity::Inconclusive:
      return "INCONCLUSIVE";
    default:
      return "VALIDATION_FAILED";
  }
}

std::string double_to_hex(double d) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", d);
  return buf;
}

nlohmann::json run_config_to_json(const RunConfig& cfg) {
  return json{{"prec", cfg.prec},
              {"backend", cfg.backend},
              {"max_relation_norm", cfg.max_relation_norm},
              {"include_first_block", cfg.include_first_block},
              {"seed", cfg.seed}};
}

nlohmann::json validation_to_json(const ValidationReport& rep) {
  json issues = json::array();
  for (const auto& issue : rep.issues) {
    const char* kind = issue.kind == ValidationIssue::NotInvertible ? "NotInvertible"
                       : issue.kind == ValidationIssue::NotAbelian  ? "NotAbelian"
                       : issue.kind == ValidationIssue::LogMismatch ? "LogMismatch"
                                                                    : "BadShape";
    issues.push_back(json{{"kind", kind}, {"k", issue.k}, {"j", issue.j}, {"detail", issue.detail}});
  }
  return json{{"ok", rep.ok},
              {"issues", issues},
              {"max_commutator_residual", double_to_hex(rep.max_commutator_residual)},
              {"max_log_residual", double_to_hex(rep.max_log_residual)}};
}

nlohmann::json report_to_json(const HypercyclicityReport& rep) {
  json j;
  j["status"] = hypercyclicity_name(rep.verdict);
  j["backend"] = rep.backend_used;
  j["density"] = verdict_to_json(rep.density);
  json w = json::array();
  for (const auto& s : rep.witness_w0) w.push_back(s);
  j["witness_w0"] = w;
  json wa = json::array();
  for (const auto& [re, im] : rep.witness_approx)
    wa.push_back(json::array({double_to_hex(re), double_to_hex(im)}));
  j["witness_w0_hex"] = wa;
  if (rep.witness_exact) j["witness_w0_exact"] = *rep.witness_exact;
  j["validation"] = validation_to_json(rep.validation);
  if (!rep.eta.empty()) {
    j["eta"] = rep.eta;
    j["r"] = rep.r;
  }
  if (rep.m >= 0) j["m"] = rep.m;
  j["residuals"] = json{{"normal_form", double_to_hex(rep.normal_form_residual)},
                        {"exp_log", double_to_hex(rep.max_log_residual)}};
  if (rep.stage_error)
    j["error"] = json{{"stage", rep.stage_error->first}, {"message", rep.stage_error->second}};
  if (!rep.note.empty()) j["note"] = rep.note;
  j["config"] = run_config_to_json(rep.config);
  return j;
}

}  // namespace hyperorbit
