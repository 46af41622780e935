#ifndef HYPERORBIT_ORBIT_HPP
#define HYPERORBIT_ORBIT_HPP

#include <complex>
#include <iosfwd>

#include "hyperorbit/affine.hpp"

namespace hyperorbit {

struct CoverageConfig {
  // per-coordinate intervals in R^{2n}: Re(z_1..z_n) then Im(z_1..z_n)
  std::vector<std::pair<double, double>> box;
  // cell size as a fraction of each interval (0.1 -> a 10-cell axis)
  double epsilon = 0.1;
  long exponent_bound = 10;        // N
  long long sample_budget = 100000;
  unsigned long long seed = 0;

  int cells_per_axis() const;
};

struct OrbitCloud {
  std::vector<std::vector<long>> words;
  std::vector<std::vector<std::complex<double>>> points;
  long long overflow_dropped = 0;
};

// Orbit samples by exponent words in [-N, N]^p: exhaustive enumeration while
// p*N stays small and the full sweep fits the budget, uniform dedup'd draws
// otherwise.
// Word evaluation runs in double precision; points beyond 1e30 are dropped
// and counted.
OrbitCloud sample_orbit(const AffinePresentation<BigComplex>& g, const std::vector<BigComplex>& x,
                        const CoverageConfig& cfg);

// Fraction of grid cells of the box holding at least one point.
double coverage(const OrbitCloud& cloud, const CoverageConfig& cfg);

// Fused sampling + cell marking; never materializes the cloud, so big
// exhaustive sweeps stay in memory bounds.
struct CoverageResult {
  double fraction = 0.0;
  long long covered_cells = 0;
  long long points_in_box = 0;
  long long words_evaluated = 0;
  long long overflow_dropped = 0;
};
CoverageResult orbit_coverage(const AffinePresentation<BigComplex>& g,
                              const std::vector<BigComplex>& x, const CoverageConfig& cfg);

void write_orbit_csv(std::ostream& os, const OrbitCloud& cloud);
// per-cell histogram of the box grid (cell multi-index, count)
void write_cell_histogram_csv(std::ostream& os, const OrbitCloud& cloud,
                              const CoverageConfig& cfg);

}  // namespace hyperorbit

#endif
