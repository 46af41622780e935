#ifndef HYPERORBIT_PIPELINE_HPP
#define HYPERORBIT_PIPELINE_HPP

#include "hyperorbit/io.hpp"
#include "hyperorbit/orbit.hpp"

namespace hyperorbit {

struct RunConfig {
  mpfr_prec_t prec = 192;
  std::string backend = "auto";  // auto | exact | numeric
  long max_relation_norm = 1000000;
  bool include_first_block = false;
  unsigned seed = 12345;
};

enum class Hypercyclicity { Hypercyclic, NotHypercyclic, Inconclusive, ValidationFailed };

struct HypercyclicityReport {
  Hypercyclicity verdict = Hypercyclicity::Inconclusive;
  DensityVerdict density;
  std::string backend_used;

  std::vector<std::string> witness_w0;                    // printable forms
  std::vector<std::pair<double, double>> witness_approx;  // (Re, Im) doubles
  std::optional<nlohmann::json> witness_exact;            // bit-exact when available

  ValidationReport validation;
  std::vector<int> eta;
  int r = 0;
  int m = -1;  // instance column count (p + r - 1), when reached
  double normal_form_residual = 0.0;
  double max_log_residual = 0.0;

  std::optional<std::pair<std::string, std::string>> stage_error;  // (stage, message)
  std::string note;
  RunConfig config;
};

// validate -> normal form -> logs -> instance -> count shortcut -> density,
// with Corollary 1.4 (p <= n) applied before any numerics. Stage failures
// land in stage_error with the verdict left INCONCLUSIVE.
HypercyclicityReport decide_hypercyclic(const PresentationSource& src, const RunConfig& cfg);

nlohmann::json report_to_json(const HypercyclicityReport& rep);
nlohmann::json validation_to_json(const ValidationReport& rep);
nlohmann::json run_config_to_json(const RunConfig& cfg);

std::string hypercyclicity_name(Hypercyclicity v);

// hex form of a double (bit-exact, locale-free)
std::string double_to_hex(double d);

}  // namespace hyperorbit

#endif
