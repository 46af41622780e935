#ifndef HYPERORBIT_NORMAL_FORM_HPP
#define HYPERORBIT_NORMAL_FORM_HPP

#include "hyperorbit/affine.hpp"

namespace hyperorbit {

struct EigenSplitFailure : std::runtime_error {
  explicit EigenSplitFailure(double gap_)
      : std::runtime_error("eigenvalue clusters unresolvable at this precision (gap " +
                           std::to_string(gap_) + ")"),
        gap(gap_) {}
  double gap;
};

struct NotCommutingError : std::runtime_error {
  NotCommutingError() : std::runtime_error("matrices do not commute within tolerance") {}
};

struct NoSeparatingElementError : std::runtime_error {
  NoSeparatingElementError()
      : std::runtime_error("no group word separates the non-unit blocks within budget") {}
};

struct FixedPointSolveFailure : std::runtime_error {
  explicit FixedPointSolveFailure(double res)
      : std::runtime_error("common fixed point solve residual " + std::to_string(res)) {}
};

struct ResidualTooLargeError : std::runtime_error {
  explicit ResidualTooLargeError(const std::string& what) : std::runtime_error(what) {}
};

struct NfOptions {
  mpfr_prec_t prec = 192;
  // |l_i - l_j| <= 2^-cluster_tol_exp treats eigenvalues as equal
  long cluster_tol_exp() const { return prec / 3; }
  long rank_tol_exp() const { return prec / 2; }
  int separating_budget = 512;  // random word attempts after single generators
  unsigned seed = 12345;
};

struct LinearNormalForm {
  Matrix<BigComplex> Q;
  BlockStructure eta;  // partition of n
  // eigenvalue_table[k][b]: the single eigenvalue of generator k on block b
  std::vector<std::vector<BigComplex>> eigenvalue_table;
  BigFloat residual;
};

// Common block-triangular form of a commuting invertible family:
// Q^{-1} A_k Q is block-diagonal along eta with lower-triangular blocks,
// one eigenvalue per (generator, block). Blocks are the common generalized
// eigenspaces, refined generator by generator, then simultaneously
// triangularized by common-eigenvector deflation.
LinearNormalForm linear_normal_form(const std::vector<Matrix<BigComplex>>& linear_parts,
                                    const NfOptions& opts);

struct NormalForm {
  Matrix<BigComplex> P, P_inv;  // (n+1) x (n+1), first row (1,0,...,0)
  BlockStructure eta;           // partition of n+1
  int r = 0;
  std::vector<BigComplex> u0, v0;  // in C^{n+1}
  std::vector<BigComplex> w0;      // in C^n
  std::vector<Matrix<BigComplex>> conjugated;  // snapped P^{-1} Phi(f_k) P
  BigFloat residual;                           // max snap deviation
  int case_tag = 0;                            // 1 or 2
  std::vector<long> separating_word;           // case 1 exponent vector (empty if unused)
};

// Exponent vector w such that the word's eigenvalue on every non-unit block
// differs from 1. Tries single generators first, then random words with
// exponents in [-3, 3].
std::vector<long> separating_element_search(
    const std::vector<std::vector<BigComplex>>& eigenvalue_table, const std::vector<bool>& in_j,
    const NfOptions& opts);

NormalForm affine_normal_form(const AffinePresentation<BigComplex>& g, const NfOptions& opts);

// Indicator vectors tied to the partition: u0 sums the block-leading basis
// vectors, block_indicator(k) is the k-th one alone.
std::vector<BigComplex> partition_u0(const BlockStructure& eta, mpfr_prec_t prec);
std::vector<BigComplex> block_indicator(const BlockStructure& eta, int k, mpfr_prec_t prec);

}  // namespace hyperorbit

#endif
