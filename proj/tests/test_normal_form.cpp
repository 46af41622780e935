#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hyperorbit/normal_form.hpp"

using namespace hyperorbit;

namespace {

const mpfr_prec_t kPrec = 192;

BigComplex bc(double re, double im = 0) { return BigComplex::from_double(re, im, kPrec); }

Matrix<BigComplex> diag2(const BigComplex& a, const BigComplex& b) {
  Matrix<BigComplex> m(2, 2, BigComplex(kPrec));
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

AffineMap<BigComplex> amap(const Matrix<BigComplex>& a, std::vector<BigComplex> t) {
  return {a, std::move(t)};
}

// the worked example's generators, numeric side
AffinePresentation<BigComplex> builtin_example_numeric() {
  AffinePresentation<BigComplex> g;
  g.n = 2;
  BigFloat pi = BigFloat::pi(kPrec);
  BigComplex e2i = bc(-2, 1).exp();
  BigComplex l3 = BigComplex{-(BigFloat::sqrt_ui(2, kPrec) / pi),
                             BigFloat::sqrt_ui(2, kPrec) / (bc(2).re * pi) -
                                 BigFloat::sqrt_ui(7, kPrec) / bc(2).re}
                      .exp();
  BigComplex b3_1 = {-(BigFloat::sqrt_ui(3, kPrec) / (bc(2).re * pi)),
                     BigFloat::sqrt_ui(5, kPrec) / bc(2).re -
                         BigFloat::sqrt_ui(3, kPrec) / (bc(2).re * pi)};
  g.generators = {
      amap(Matrix<BigComplex>::identity(2, BigComplex(kPrec)), {bc(1, 1), bc(0)}),
      amap(diag2(bc(1), e2i), {bc(0), bc(0)}),
      amap(diag2(bc(1), l3), {b3_1, bc(0)}),
      amap(Matrix<BigComplex>::identity(2, BigComplex(kPrec)),
           {BigComplex{BigFloat(kPrec), BigFloat::from_long(2, kPrec) * pi}, bc(0)}),
  };
  return g;
}

}  // namespace

TEST_CASE("linear normal form: all identity") {
  NfOptions opts;
  opts.prec = kPrec;
  std::vector<Matrix<BigComplex>> as = {Matrix<BigComplex>::identity(3, BigComplex(kPrec))};
  auto lnf = linear_normal_form(as, opts);
  CHECK(lnf.eta.sizes() == std::vector<int>{3});
  CHECK(lnf.residual <= BigFloat::pow2(-96, kPrec));
  CHECK((lnf.eigenvalue_table[0][0] - bc(1)).abs() <= BigFloat::pow2(-96, kPrec));
}

TEST_CASE("linear normal form: worked-example diagonal parts give eta (1,1)") {
  NfOptions opts;
  opts.prec = kPrec;
  auto g = builtin_example_numeric();
  std::vector<Matrix<BigComplex>> as;
  for (auto& f : g.generators) as.push_back(f.linear);
  auto lnf = linear_normal_form(as, opts);
  REQUIRE(lnf.eta.count() == 2);
  CHECK(lnf.eta.sizes() == std::vector<int>{1, 1});
  CHECK(lnf.residual <= BigFloat::pow2(-96, kPrec));
}

TEST_CASE("linear normal form: rotation and identity split into eigenvalues +-i") {
  NfOptions opts;
  opts.prec = kPrec;
  Matrix<BigComplex> rot(2, 2, BigComplex(kPrec));
  rot(0, 1) = bc(-1);
  rot(1, 0) = bc(1);
  std::vector<Matrix<BigComplex>> as = {rot, Matrix<BigComplex>::identity(2, BigComplex(kPrec))};
  auto lnf = linear_normal_form(as, opts);
  REQUIRE(lnf.eta.sizes() == std::vector<int>{1, 1});
  // eigenvalue table: rotation contributes +-i (either order)
  BigFloat tol = BigFloat::pow2(-96, kPrec);
  BigComplex l0 = lnf.eigenvalue_table[0][0], l1 = lnf.eigenvalue_table[0][1];
  CHECK((l0 * l1 - bc(1)).abs() <= tol);   // product = 1
  CHECK((l0 + l1).abs() <= tol);           // sum = 0
  CHECK(lnf.residual <= tol);
}

TEST_CASE("linear normal form: nontrivial commuting pair with shared eigenvectors") {
  NfOptions opts;
  opts.prec = kPrec;
  // A = [[2,1],[0,3]] (upper!) and its polynomial B = A^2: commuting, needs a
  // basis flip into lower-triangular shape
  Matrix<BigComplex> a(2, 2, BigComplex(kPrec));
  a(0, 0) = bc(2);
  a(0, 1) = bc(1);
  a(1, 1) = bc(3);
  std::vector<Matrix<BigComplex>> as = {a, a * a};
  auto lnf = linear_normal_form(as, opts);
  CHECK(lnf.eta.sizes() == std::vector<int>{1, 1});
  CHECK(lnf.residual <= BigFloat::pow2(-90, kPrec));
}

TEST_CASE("linear normal form: Jordan-type block stays together") {
  NfOptions opts;
  opts.prec = kPrec;
  // lower Jordan block J with eigenvalue 2; family {J, J^2} shares eta=(2)
  Matrix<BigComplex> j(2, 2, BigComplex(kPrec));
  j(0, 0) = bc(2);
  j(1, 1) = bc(2);
  j(1, 0) = bc(1);
  std::vector<Matrix<BigComplex>> as = {j, j * j};
  auto lnf = linear_normal_form(as, opts);
  CHECK(lnf.eta.sizes() == std::vector<int>{2});
  CHECK(lnf.residual <= BigFloat::pow2(-90, kPrec));
}

TEST_CASE("separating element search on the worked example picks f2") {
  NfOptions opts;
  opts.prec = kPrec;
  auto g = builtin_example_numeric();
  std::vector<Matrix<BigComplex>> as;
  for (auto& f : g.generators) as.push_back(f.linear);
  auto lnf = linear_normal_form(as, opts);
  // block order: the eigenvalue-1 block and the moving block; mark J
  std::vector<bool> in_j(2);
  BigFloat ctol = BigFloat::pow2(-opts.cluster_tol_exp(), kPrec);
  for (int b = 0; b < 2; ++b) {
    in_j[b] = true;
    for (int k = 0; k < 4; ++k)
      if ((lnf.eigenvalue_table[k][b] - bc(1)).abs() > ctol) in_j[b] = false;
  }
  CHECK((in_j[0] != in_j[1]));
  auto w = separating_element_search(lnf.eigenvalue_table, in_j, opts);
  REQUIRE(w.size() == 4);
  CHECK(w == std::vector<long>{0, 1, 0, 0});
}

TEST_CASE("separating element search: inverse-pair eigenvalues") {
  NfOptions opts;
  opts.prec = kPrec;
  // one non-unit block; f1 has eigenvalue l != 1, f2 has l^{-1}
  std::vector<std::vector<BigComplex>> table = {{bc(0.5, 0.25)}, {bc(0.5, 0.25).inverse()}};
  std::vector<bool> in_j = {false};
  auto w = separating_element_search(table, in_j, opts);
  CHECK(w == std::vector<long>{1, 0});
}

TEST_CASE("separating element search: no single generator works") {
  NfOptions opts;
  opts.prec = kPrec;
  // two non-unit blocks; f1 moves only block 1, f2 only block 2
  std::vector<std::vector<BigComplex>> table = {{bc(2), bc(1)}, {bc(1), bc(3)}};
  std::vector<bool> in_j = {false, false};
  auto w = separating_element_search(table, in_j, opts);
  // the word must move both blocks: both exponents nonzero
  CHECK(w[0] != 0);
  CHECK(w[1] != 0);
}

TEST_CASE("affine normal form on the worked example: case 1, eta (2,1), w0=(0,1)") {
  NfOptions opts;
  opts.prec = kPrec;
  auto g = builtin_example_numeric();
  auto nf = affine_normal_form(g, opts);
  CHECK(nf.case_tag == 1);
  CHECK(nf.eta.sizes() == std::vector<int>{2, 1});
  CHECK(nf.r == 2);
  BigFloat tol = BigFloat::pow2(-80, kPrec);
  CHECK(nf.residual <= tol);
  // P = I3 via the direct route; w0 = (0, 1)
  CHECK(max_abs_diff(nf.P, Matrix<BigComplex>::identity(3, BigComplex(kPrec))) <= tol);
  CHECK(nf.w0[0].abs() <= tol);
  CHECK((nf.w0[1] - bc(1)).abs() <= tol);
  // conjugated generators pass the block test
  for (const auto& c : nf.conjugated)
    CHECK(is_block_lower_triangular(c, nf.eta, BigFloat::pow2(-80, kPrec)));
  // v0 = P u0 in {1} x C^n
  CHECK((nf.v0[0] - bc(1)).abs() <= tol);
}

TEST_CASE("affine normal form: pure translation group in C^1") {
  NfOptions opts;
  opts.prec = kPrec;
  AffinePresentation<BigComplex> g;
  g.n = 1;
  g.generators = {amap(Matrix<BigComplex>::identity(1, BigComplex(kPrec)), {bc(1)})};
  auto nf = affine_normal_form(g, opts);
  CHECK(nf.case_tag == 1);
  CHECK(nf.eta.sizes() == std::vector<int>{2});
  CHECK(nf.r == 1);
  CHECK(max_abs_diff(nf.P, Matrix<BigComplex>::identity(2, BigComplex(kPrec))) <=
        BigFloat::pow2(-90, kPrec));
  CHECK(nf.w0[0].abs() <= BigFloat::pow2(-90, kPrec));
}

TEST_CASE("affine normal form: dilation x -> 2x hits case 2") {
  NfOptions opts;
  opts.prec = kPrec;
  AffinePresentation<BigComplex> g;
  g.n = 1;
  Matrix<BigComplex> two(1, 1, BigComplex(kPrec));
  two(0, 0) = bc(2);
  g.generators = {amap(two, {bc(0)})};
  auto nf = affine_normal_form(g, opts);
  CHECK(nf.case_tag == 2);
  CHECK(nf.eta.sizes() == std::vector<int>{1, 1});
  CHECK(nf.r == 2);
  CHECK(max_abs_diff(nf.P, Matrix<BigComplex>::identity(2, BigComplex(kPrec))) <=
        BigFloat::pow2(-90, kPrec));
}

TEST_CASE("affine normal form: case 2 with a shifted fixed point") {
  NfOptions opts;
  opts.prec = kPrec;
  // f(x) = 2x + 1 fixes -1: P carries the fixed point, conjugates get zero
  // translation
  AffinePresentation<BigComplex> g;
  g.n = 1;
  Matrix<BigComplex> two(1, 1, BigComplex(kPrec));
  two(0, 0) = bc(2);
  g.generators = {amap(two, {bc(1)})};
  auto nf = affine_normal_form(g, opts);
  CHECK(nf.case_tag == 2);
  BigFloat tol = BigFloat::pow2(-80, kPrec);
  CHECK((nf.P(1, 0) - bc(-1)).abs() <= tol);
  // conjugate [[1,0],[0,2]]
  CHECK((nf.conjugated[0](1, 0)).abs() <= tol);
  CHECK((nf.conjugated[0](1, 1) - bc(2)).abs() <= tol);
  // w0 = p2(P u0) with u0 = (1,1): fixed point plus the eigvec column
  CHECK((nf.w0[0] - (nf.P(1, 0) + nf.P(1, 1))).abs() <= tol);
}

TEST_CASE("affine normal form: case 1 requiring the P2 correction") {
  NfOptions opts;
  opts.prec = kPrec;
  // n=2: f1 translates the unit block, f2 = diag(1,3) + translation on the
  // moving coordinate, commuting: (A2-I)a1 = 0 since a1 = (1,0);
  // (A1-I)a2 = 0 trivially. a2 = (0,1) forces the P2 step.
  AffinePresentation<BigComplex> g;
  g.n = 2;
  g.generators = {
      amap(Matrix<BigComplex>::identity(2, BigComplex(kPrec)), {bc(1), bc(0)}),
      amap(diag2(bc(1), bc(3)), {bc(0), bc(1)}),
  };
  auto nf = affine_normal_form(g, opts);
  CHECK(nf.case_tag == 1);
  CHECK(nf.eta.sizes() == std::vector<int>{2, 1});
  CHECK(nf.r == 2);
  CHECK(nf.residual <= BigFloat::pow2(-80, kPrec));
  CHECK(!nf.separating_word.empty());
  for (const auto& c : nf.conjugated)
    CHECK(is_block_lower_triangular(c, nf.eta, BigFloat::pow2(-80, kPrec)));
  // v0 stays in {1} x C^n
  CHECK((nf.v0[0] - bc(1)).abs() <= BigFloat::pow2(-80, kPrec));
}

TEST_CASE("separating search returns the single moving generator") {
  NfOptions opts;
  opts.prec = kPrec;
  // one non-unit block; f1 sits at eigenvalue 1 there, f2 moves it
  std::vector<std::vector<BigComplex>> table = {{bc(1)}, {bc(0.3, 0.7)}};
  std::vector<bool> in_j = {false};
  CHECK(separating_element_search(table, in_j, opts) == std::vector<long>{0, 1});
}
