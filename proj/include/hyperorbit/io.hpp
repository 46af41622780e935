#ifndef HYPERORBIT_IO_HPP
#define HYPERORBIT_IO_HPP

#include <json.hpp>

#include "hyperorbit/density.hpp"
#include "hyperorbit/scalar_expr.hpp"

namespace hyperorbit {

struct SchemaViolation {
  std::string where;
  std::string message;
};

struct InputError : std::runtime_error {
  explicit InputError(std::vector<SchemaViolation> v)
      : std::runtime_error(join(v)), violations(std::move(v)) {}
  std::vector<SchemaViolation> violations;
  static std::string join(const std::vector<SchemaViolation>& v);
};

struct AffineMapSource {
  std::vector<std::vector<ScalarExpr>> linear;  // n x n
  std::vector<ScalarExpr> translation;          // n
};

// Parsed-but-unrealized presentation: every scalar is an expression tree;
// realization picks the backend.
struct PresentationSource {
  int n = 0;
  SurdBasis constants;
  std::vector<AffineMapSource> generators;
  std::optional<std::vector<AffineMapSource>> log_generators;
  std::optional<std::vector<std::vector<ScalarExpr>>> hint_P;  // (n+1) x (n+1)
  std::optional<std::vector<int>> hint_eta;

  int p() const { return static_cast<int>(generators.size()); }

  AffinePresentation<BigComplex> realize_numeric(mpfr_prec_t prec) const;

  // Exact pieces, each present only when every entry involved is exact.
  struct ExactPieces {
    std::optional<std::vector<AffineMap<ExactComplex>>> generators;
    std::optional<std::vector<AffineMap<ExactComplex>>> log_generators;
    std::optional<Matrix<ExactComplex>> P;
    std::optional<BlockStructure> eta;
    bool full_exact_pipeline() const { return log_generators && P && eta; }
  };
  ExactPieces realize_exact() const;
};

// Schema: { "n": int, "constants": [d...], "generators": [{"A": [[lit..]..],
// "a": [lit..]}...], "log_generators": optional, "P": optional, "eta":
// optional }. All schema violations are collected before failing.
PresentationSource load_presentation(const nlohmann::json& j);
PresentationSource load_presentation_file(const std::string& path);
nlohmann::json presentation_to_json(const PresentationSource& src);

// The worked example, embedded: exact log generators with P = I3 and
// eta = (2,1) alongside the exponentiated generators.
PresentationSource builtin_example();

// Bit-exact serialization {num: [[pi-power, surd, "p/q"]...], den: [...]}.
nlohmann::json exact_real_to_json(const ExactReal& x);
ExactReal exact_real_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const DensityVerdict& v);

std::string status_name(DensityStatus s);
std::string certificate_name(Certificate::Type t);

}  // namespace hyperorbit

#endif
