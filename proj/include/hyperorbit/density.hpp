#ifndef HYPERORBIT_DENSITY_HPP
#define HYPERORBIT_DENSITY_HPP

#include <optional>

#include "hyperorbit/explog.hpp"
#include "hyperorbit/lll.hpp"

namespace hyperorbit {

struct MixedBackendError : std::runtime_error {
  MixedBackendError() : std::runtime_error("density instance mixes scalar backends") {}
};

struct PrecisionTooLowError : std::runtime_error {
  PrecisionTooLowError() : std::runtime_error("numeric density test requires prec >= 128") {}
};

enum class DensityStatus { Dense, NotDense, Inconclusive };

struct Certificate {
  enum Type {
    ExactRankProof,         // exact rank of V (+ trivial rational kernel when dense)
    IntegerRelation,        // nonzero s in Z^m with rank [V; s] <= 2n
    CountShortfall,         // m <= 2n columns cannot reach rank 2n+1
    LatticeConfidence,      // no relation with max |s_j| <= bound at this precision
    NumericRankDeficiency,  // numeric rank of V below 2n
  };
  Type type;
  std::vector<BigInt> relation;  // IntegerRelation
  int rank = -1;                 // rank statements
  int required = -1;
  int mq_rank = -1;              // rank of the rational constraint matrix (exact route)
  int m = -1;                    // CountShortfall data
  int needed = -1;
  long max_relation_norm = 0;    // LatticeConfidence bound
};

struct DensityVerdict {
  DensityStatus status = DensityStatus::Inconclusive;
  Certificate certificate;
  std::string backend;  // "exact" or "numeric"
};

// The generator set of the additive module: f'_k(w0) for k = 1..p followed
// by the lattice columns 2*i*pi*p2(P e^{(k)}), k = 2..r (k = 1..r with
// include_first_block). provenance[j] records which of the two families the
// column came from; zero columns are tagged "(zero)".
template <class T>
struct DensityInstance {
  int n = 0;
  int p = 0;
  int r = 1;
  std::vector<std::vector<T>> vectors;
  std::vector<std::string> provenance;
  int m() const { return static_cast<int>(vectors.size()); }
};

DensityInstance<ExactComplex> build_instance(const std::vector<AffineMap<ExactComplex>>& logs,
                                             const Matrix<ExactComplex>& p_mat,
                                             const BlockStructure& eta,
                                             const std::vector<ExactComplex>& w0,
                                             bool include_first_block = false);

DensityInstance<BigComplex> build_instance(const std::vector<LogGenerator>& logs,
                                           const NormalForm& nf,
                                           bool include_first_block = false);

// Corollary shortcut: m <= 2n columns can never give rank 2n+1.
std::optional<DensityVerdict> count_shortcut(int m, int n);

// Real embedding V = [Re(u_1..u_m); Im(u_1..u_m)], a 2n x m matrix.
Matrix<ExactReal> real_embedding(const DensityInstance<ExactComplex>& inst);
Matrix<BigFloat> real_embedding(const DensityInstance<BigComplex>& inst);

// Cofactors C_k of the square case m = 2n+1: det [V; s] = sum_k s_k C_k.
std::vector<ExactReal> square_case_cofactors(const Matrix<ExactReal>& v);

// Exact density decision: rank_F(V) = 2n and no nonzero rational vector in
// the rowspace of V (equivalently the rational kernel of the monomial
// constraint matrix is trivial). A found relation is scaled to a primitive
// integer certificate.
DensityVerdict waldschmidt_exact(const DensityInstance<ExactComplex>& inst);

// Numeric surrogate: nullspace + lattice reduction on {(s, C * N^T s)}.
DensityVerdict waldschmidt_numeric(const DensityInstance<BigComplex>& inst,
                                   long max_relation_norm);

// Exact recheck used for certificate soundness: rank of [V; s] under an
// independent elimination with permuted rows.
bool relation_certificate_sound(const DensityInstance<ExactComplex>& inst,
                                const std::vector<BigInt>& relation, unsigned seed);

}  // namespace hyperorbit

#endif
