#ifndef HYPERORBIT_EXPLOG_HPP
#define HYPERORBIT_EXPLOG_HPP

#include "hyperorbit/normal_form.hpp"

namespace hyperorbit {

struct ZeroDiagonalError : std::runtime_error {
  ZeroDiagonalError() : std::runtime_error("triangular log requires a nonzero diagonal") {}
};

struct BranchFailureError : std::runtime_error {
  explicit BranchFailureError(const std::string& what) : std::runtime_error(what) {}
};

// exp on T_m: e^{mu I + L} = e^mu * sum L^k / k!, the nilpotent series
// terminating after m terms.
Matrix<BigComplex> block_exp(const Matrix<BigComplex>& n);

// log on T*_m: principal log of the constant diagonal plus the finite
// Mercator series of the unipotent offset. With force_zero_eigenvalue_log
// the diagonal must lie within tol of 1 and is sent to exactly 0 (the branch
// that lands in F_{n+1}).
Matrix<BigComplex> block_log(const Matrix<BigComplex>& m, bool force_zero_eigenvalue_log,
                             const BigFloat& tol);

// Blockwise versions along a partition.
Matrix<BigComplex> keta_exp(const Matrix<BigComplex>& n, const BlockStructure& eta);
Matrix<BigComplex> keta_log(const Matrix<BigComplex>& m, const BlockStructure& eta,
                            int force_zero_block, const BigFloat& tol);

struct LogGenerator {
  AffineMap<BigComplex> map;        // f'_k = (B, b) with e^{Psi(f'_k)} = Phi(f_k)
  int source_index = 0;             // k, 0-based
  std::vector<long> branch_shifts;  // 2*pi*i*k corrections per block
  BigFloat residual;                // ||e^{Psi(f')} - Phi(f)||_max
};

// Blockwise log of every conjugated generator, forced to eigenvalue-log 0 on
// the homogeneous block, conjugated back and read off through Psi^{-1}.
std::vector<LogGenerator> compute_log_generators(const NormalForm& nf,
                                                 const AffinePresentation<BigComplex>& g,
                                                 const NfOptions& opts);

struct G1Report {
  bool shifts_exit_f = true;    // Psi(f') + 2 i pi I leaves the zero-first-row space
  bool exp_unchanged = true;    // exp is invariant under the 2 i pi I shift
  double max_residual = 0.0;
};

G1Report verify_g1_decomposition(const std::vector<LogGenerator>& logs, const NormalForm& nf);

}  // namespace hyperorbit

#endif
