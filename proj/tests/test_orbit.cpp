#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "hyperorbit/orbit.hpp"

using namespace hyperorbit;

namespace {

const mpfr_prec_t kPrec = 96;

BigComplex bc(double re, double im = 0) { return BigComplex::from_double(re, im, kPrec); }

AffinePresentation<BigComplex> translations(std::vector<BigComplex> shifts) {
  AffinePresentation<BigComplex> g;
  g.n = 1;
  for (auto& s : shifts)
    g.generators.push_back({Matrix<BigComplex>::identity(1, BigComplex(kPrec)), {s}});
  return g;
}

CoverageConfig unit_box_cfg(double eps, long nbound, long long budget = 100000) {
  CoverageConfig cfg;
  cfg.box = {{-1.0, 1.0}, {-1.0, 1.0}};
  cfg.epsilon = eps;
  cfg.exponent_bound = nbound;
  cfg.sample_budget = budget;
  cfg.seed = 7;
  return cfg;
}

}  // namespace

TEST_CASE("identity group yields the single starting point") {
  AffinePresentation<BigComplex> g;
  g.n = 1;
  g.generators = {AffineMap<BigComplex>::identity(1, BigComplex(kPrec))};
  auto cfg = unit_box_cfg(0.1, 3);
  auto cloud = sample_orbit(g, {bc(0.25, -0.5)}, cfg);
  CHECK(cloud.points.size() == 7);  // 7 words, all landing on the same point
  for (const auto& z : cloud.points) {
    CHECK(z[0].real() == doctest::Approx(0.25));
    CHECK(z[0].imag() == doctest::Approx(-0.5));
  }
}

TEST_CASE("translations {1, i} with N=2 produce the 25 lattice points") {
  auto g = translations({bc(1), bc(0, 1)});
  auto cfg = unit_box_cfg(0.1, 2);
  auto cloud = sample_orbit(g, {bc(0)}, cfg);
  REQUIRE(cloud.points.size() == 25);
  std::set<std::pair<long, long>> pts;
  for (const auto& z : cloud.points)
    pts.insert({std::lround(z[0].real()), std::lround(z[0].imag())});
  CHECK(pts.size() == 25);
  CHECK(pts.count({-2, 2}) == 1);
  CHECK(pts.count({0, 0}) == 1);
}

TEST_CASE("coverage: empty cloud is 0, full grid of cell centers is 1") {
  auto cfg = unit_box_cfg(0.1, 1);
  OrbitCloud empty;
  CHECK(coverage(empty, cfg) == 0.0);

  OrbitCloud centers;
  int c = cfg.cells_per_axis();
  REQUIRE(c == 10);
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j) {
      double x = -1.0 + (i + 0.5) * 2.0 / c;
      double y = -1.0 + (j + 0.5) * 2.0 / c;
      centers.points.push_back({{x, y}});
      centers.words.push_back({0});
    }
  CHECK(coverage(centers, cfg) == 1.0);
}

TEST_CASE("dense instance regression: coverage 1.0 at N=60 on the 10x10 grid") {
  auto g = translations({bc(1), bc(0, 1), bc(std::sqrt(2.0), std::sqrt(3.0))});
  auto cfg = unit_box_cfg(0.1, 60, 2000000);
  auto res = orbit_coverage(g, {bc(0)}, cfg);
  CHECK(res.words_evaluated == 121LL * 121 * 121);
  CHECK(res.fraction >= 0.9);
}

TEST_CASE("not-dense instance plateaus between N=100 and N=200") {
  auto g = translations({bc(1), bc(0, 1), bc(std::sqrt(2.0), std::sqrt(2.0))});
  auto cfg100 = unit_box_cfg(0.1, 100, 100000000);
  auto cfg200 = unit_box_cfg(0.1, 200, 100000000);
  double c100 = orbit_coverage(g, {bc(0)}, cfg100).fraction;
  double c200 = orbit_coverage(g, {bc(0)}, cfg200).fraction;
  CHECK(c200 - c100 <= 0.02);
  CHECK(c200 >= c100);  // monotone in the exponent bound
}

TEST_CASE("coverage is monotone in the exponent bound (exhaustive regime)") {
  auto g = translations({bc(1), bc(0, 1), bc(std::sqrt(2.0), std::sqrt(3.0))});
  double prev = 0;
  for (long nb : {5L, 10L, 20L, 40L}) {
    auto cfg = unit_box_cfg(0.1, nb, 2000000);
    double c = orbit_coverage(g, {bc(0)}, cfg).fraction;
    CHECK(c >= prev);
    prev = c;
  }
}

TEST_CASE("random sampling: budget extension only adds points (fixed seed)") {
  // p*N > 1e6 pushes into the random regime
  auto g = translations({bc(1), bc(0, 1)});
  CoverageConfig big = unit_box_cfg(0.1, 600000, 400);
  CoverageConfig small = big;
  small.sample_budget = 200;
  auto cs = sample_orbit(g, {bc(0)}, small);
  auto cb = sample_orbit(g, {bc(0)}, big);
  REQUIRE(cs.words.size() <= cb.words.size());
  for (size_t i = 0; i < cs.words.size(); ++i) CHECK(cs.words[i] == cb.words[i]);
}

TEST_CASE("overflow guard drops runaway points") {
  AffinePresentation<BigComplex> g;
  g.n = 1;
  Matrix<BigComplex> big(1, 1, BigComplex(kPrec));
  big(0, 0) = bc(1e8);
  g.generators = {{big, {bc(0)}}};
  auto cfg = unit_box_cfg(0.1, 6);
  auto cloud = sample_orbit(g, {bc(1)}, cfg);
  CHECK(cloud.overflow_dropped > 0);
  CHECK(cloud.points.size() + static_cast<size_t>(cloud.overflow_dropped) == 13);
}

TEST_CASE("orbit points match the homogeneous route {1} x G(x) = G(1,x)") {
  // apply Phi-matrices to (1, x) and project: same cloud
  auto g = translations({bc(0.5, 0.25), bc(0, 1)});
  auto cfg = unit_box_cfg(0.1, 3);
  auto cloud = sample_orbit(g, {bc(0.125, -0.375)}, cfg);
  AffinePresentation<BigComplex> gh;
  gh.n = 2;
  for (const auto& f : g.generators) {
    Matrix<BigComplex> phi = phi_embed(f);
    gh.generators.push_back({phi, {BigComplex(kPrec), BigComplex(kPrec)}});
  }
  auto cloud_h = sample_orbit(gh, {bc(1), bc(0.125, -0.375)}, cfg);
  REQUIRE(cloud.points.size() == cloud_h.points.size());
  for (size_t i = 0; i < cloud.points.size(); ++i) {
    CHECK(cloud_h.points[i][0].real() == doctest::Approx(1.0));
    CHECK(cloud_h.points[i][0].imag() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(cloud_h.points[i][1].real() == doctest::Approx(cloud.points[i][0].real()));
    CHECK(cloud_h.points[i][1].imag() == doctest::Approx(cloud.points[i][0].imag()));
  }
}

TEST_CASE("csv writers emit one line per point / per covered cell") {
  auto g = translations({bc(1)});
  auto cfg = unit_box_cfg(0.5, 1);
  auto cloud = sample_orbit(g, {bc(0)}, cfg);
  std::ostringstream os;
  write_orbit_csv(os, cloud);
  const std::string csv = os.str();
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  std::ostringstream hs;
  write_cell_histogram_csv(hs, cloud, cfg);
  const std::string hist = hs.str();
  CHECK(std::count(hist.begin(), hist.end(), '\n') >= 1);
}

TEST_CASE("worked-example orbit from w0 touches every sign quadrant") {
  const mpfr_prec_t prec = 96;
  AffinePresentation<BigComplex> g;
  g.n = 2;
  BigFloat pi = BigFloat::pi(prec);
  BigFloat two = BigFloat::from_long(2, prec);
  BigComplex lam3 = {-(BigFloat::sqrt_ui(2, prec) / pi),
                     BigFloat::sqrt_ui(2, prec) / (two * pi) - BigFloat::sqrt_ui(7, prec) / two};
  BigComplex b3 = {-(BigFloat::sqrt_ui(3, prec) / (two * pi)),
                   BigFloat::sqrt_ui(5, prec) / two - BigFloat::sqrt_ui(3, prec) / (two * pi)};
  auto ident = [&] { return Matrix<BigComplex>::identity(2, BigComplex(prec)); };
  Matrix<BigComplex> a2 = ident(), a3 = ident();
  a2(1, 1) = BigComplex::from_double(-2, 1, prec).exp();
  a3(1, 1) = lam3.exp();
  g.generators = {
      {ident(), {BigComplex::from_double(1, 1, prec), BigComplex(prec)}},
      {a2, {BigComplex(prec), BigComplex(prec)}},
      {a3, {b3, BigComplex(prec)}},
      {ident(), {BigComplex{BigFloat(prec), two * pi}, BigComplex(prec)}},
  };
  CoverageConfig cfg;
  cfg.box = {{-1.0, 1.0}, {-1.0, 1.0}, {-1.0, 1.0}, {-1.0, 1.0}};
  cfg.epsilon = 0.5;
  cfg.exponent_bound = 3;
  cfg.sample_budget = 3000;  // covers the 7^4 sweep
  std::vector<BigComplex> w0 = {BigComplex(prec), BigComplex::from_long(1, prec)};
  auto cloud = sample_orbit(g, w0, cfg);
  // quadrant coverage in each complex coordinate
  bool quad1[2][2] = {{false, false}, {false, false}};
  bool quad2[2][2] = {{false, false}, {false, false}};
  for (const auto& z : cloud.points) {
    quad1[z[0].real() > 0][z[0].imag() > 0] = true;
    quad2[z[1].real() > 0][z[1].imag() > 0] = true;
  }
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      CHECK(quad1[a][b]);
      CHECK(quad2[a][b]);
    }
}
