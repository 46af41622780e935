#include "hyperorbit/orbit.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <ostream>
#include <random>
#include <unordered_set>

namespace hyperorbit {

namespace {

constexpr double kOverflowGuard = 1e30;

using CMap = std::pair<std::vector<std::complex<double>>, std::vector<std::complex<double>>>;
// (flattened row-major linear part, translation)

struct DoubleGroup {
  int n = 0, p = 0;
  // powers[k][e + N] = f_k^e as (A, a) in doubles
  std::vector<std::vector<CMap>> powers;
};

CMap to_cmap(const AffineMap<BigComplex>& f) {
  int n = f.dim();
  CMap m;
  m.first.resize(static_cast<size_t>(n) * n);
  m.second.resize(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      m.first[i * n + j] = {f.linear(i, j).re.to_double(), f.linear(i, j).im.to_double()};
    m.second[i] = {f.translation[i].re.to_double(), f.translation[i].im.to_double()};
  }
  return m;
}

CMap cmap_compose(const CMap& f, const CMap& g, int n) {
  CMap h;
  h.first.assign(static_cast<size_t>(n) * n, {0, 0});
  h.second.assign(n, {0, 0});
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      std::complex<double> a = f.first[i * n + k];
      for (int j = 0; j < n; ++j) h.first[i * n + j] += a * g.first[k * n + j];
      h.second[i] += a * g.second[k];
    }
    h.second[i] += f.second[i];
  }
  return h;
}

CMap cmap_inverse(const CMap& f, int n) {
  // Gaussian elimination in doubles; fine at corroboration scale
  std::vector<std::complex<double>> a = f.first;
  std::vector<std::complex<double>> inv(static_cast<size_t>(n) * n, {0, 0});
  for (int i = 0; i < n; ++i) inv[i * n + i] = 1.0;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int i = c + 1; i < n; ++i)
      if (std::abs(a[i * n + c]) > std::abs(a[piv * n + c])) piv = i;
    if (std::abs(a[piv * n + c]) == 0.0) throw NumericSingularError();
    if (piv != c)
      for (int j = 0; j < n; ++j) {
        std::swap(a[piv * n + j], a[c * n + j]);
        std::swap(inv[piv * n + j], inv[c * n + j]);
      }
    std::complex<double> d = a[c * n + c];
    for (int j = 0; j < n; ++j) {
      a[c * n + j] /= d;
      inv[c * n + j] /= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c) continue;
      std::complex<double> fct = a[i * n + c];
      if (fct == std::complex<double>(0, 0)) continue;
      for (int j = 0; j < n; ++j) {
        a[i * n + j] -= fct * a[c * n + j];
        inv[i * n + j] -= fct * inv[c * n + j];
      }
    }
  }
  CMap out;
  out.first = std::move(inv);
  out.second.assign(n, {0, 0});
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.second[i] -= out.first[i * n + j] * f.second[j];
  }
  return out;
}

DoubleGroup build_group(const AffinePresentation<BigComplex>& g, long nbound) {
  DoubleGroup d;
  d.n = g.n;
  d.p = g.p();
  d.powers.resize(d.p);
  for (int k = 0; k < d.p; ++k) {
    CMap base = to_cmap(g.generators[k]);
    CMap binv = cmap_inverse(base, d.n);
    auto& row = d.powers[k];
    row.resize(2 * nbound + 1);
    CMap idm;
    idm.first.assign(static_cast<size_t>(d.n) * d.n, {0, 0});
    for (int i = 0; i < d.n; ++i) idm.first[i * d.n + i] = 1.0;
    idm.second.assign(d.n, {0, 0});
    row[nbound] = idm;
    for (long e = 1; e <= nbound; ++e) {
      row[nbound + e] = cmap_compose(row[nbound + e - 1], base, d.n);
      row[nbound - e] = cmap_compose(row[nbound - e + 1], binv, d.n);
    }
  }
  return d;
}

bool eval_word(const DoubleGroup& d, const std::vector<long>& word, long nbound,
               const std::vector<std::complex<double>>& x,
               std::vector<std::complex<double>>& out) {
  out = x;
  std::vector<std::complex<double>> tmp(d.n);
  for (int k = d.p - 1; k >= 0; --k) {
    const CMap& f = d.powers[k][nbound + word[k]];
    for (int i = 0; i < d.n; ++i) {
      std::complex<double> s = f.second[i];
      for (int j = 0; j < d.n; ++j) s += f.first[i * d.n + j] * out[j];
      tmp[i] = s;
    }
    out.swap(tmp);
  }
  for (const auto& z : out)
    if (!(std::abs(z.real()) <= kOverflowGuard && std::abs(z.imag()) <= kOverflowGuard))
      return false;
  return true;
}

struct CellGrid {
  int cells = 1;
  std::vector<std::pair<double, double>> box;
  std::unordered_set<uint64_t> covered;

  explicit CellGrid(const CoverageConfig& cfg) : cells(cfg.cells_per_axis()), box(cfg.box) {}

  long long total() const {
    long long t = 1;
    for (size_t i = 0; i < box.size(); ++i) t *= cells;
    return t;
  }

  // returns false when the point leaves the box
  bool mark(const std::vector<std::complex<double>>& z) {
    uint64_t idx = 0;
    const size_t n = z.size();
    for (size_t c = 0; c < 2 * n; ++c) {
      double v = c < n ? z[c].real() : z[c - n].imag();
      auto [lo, hi] = box[c];
      if (v < lo || v > hi) return false;
      int cell = static_cast<int>((v - lo) / (hi - lo) * cells);
      if (cell >= cells) cell = cells - 1;
      idx = idx * static_cast<uint64_t>(cells) + static_cast<uint64_t>(cell);
    }
    covered.insert(idx);
    return true;
  }
};

uint64_t hash_word(const std::vector<long>& w) {
  uint64_t h = 1469598103934665603ull;
  for (long x : w) {
    h ^= static_cast<uint64_t>(x) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

template <class Visit>
void for_each_word(int p, const CoverageConfig& cfg, Visit&& visit) {
  const long nb = cfg.exponent_bound;
  const long long radix = 2 * nb + 1;
  // exhaustive while p*N stays small and the budget holds the whole sweep;
  // a truncated lexicographic sweep would bias toward one corner
  double total_combos = std::pow(static_cast<double>(radix), p);
  bool exhaustive = static_cast<long long>(p) * nb <= 1000000 &&
                    total_combos <= static_cast<double>(cfg.sample_budget);
  if (exhaustive) {
    std::vector<long> w(p, -nb);
    for (;;) {
      if (!visit(w)) return;
      int k = 0;
      while (k < p && w[k] == nb) w[k++] = -nb;
      if (k == p) break;
      ++w[k];
    }
  } else {
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<long> e(-nb, nb);
    std::unordered_set<uint64_t> seen;
    long long produced = 0, attempts = 0;
    const long long max_attempts = 4 * cfg.sample_budget + 64;
    std::vector<long> w(p);
    while (produced < cfg.sample_budget && attempts < max_attempts) {
      ++attempts;
      for (int k = 0; k < p; ++k) w[k] = e(rng);
      if (!seen.insert(hash_word(w)).second) continue;
      if (!visit(w)) return;
      ++produced;
    }
  }
}

}  // namespace

int CoverageConfig::cells_per_axis() const {
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  int c = static_cast<int>(std::lround(1.0 / epsilon));
  return c < 1 ? 1 : c;
}

OrbitCloud sample_orbit(const AffinePresentation<BigComplex>& g, const std::vector<BigComplex>& x,
                        const CoverageConfig& cfg) {
  DoubleGroup d = build_group(g, cfg.exponent_bound);
  std::vector<std::complex<double>> x0(g.n);
  for (int i = 0; i < g.n; ++i) x0[i] = {x[i].re.to_double(), x[i].im.to_double()};

  OrbitCloud cloud;
  std::vector<std::complex<double>> y;
  for_each_word(d.p, cfg, [&](const std::vector<long>& w) {
    if (eval_word(d, w, cfg.exponent_bound, x0, y)) {
      cloud.words.push_back(w);
      cloud.points.push_back(y);
    } else {
      ++cloud.overflow_dropped;
    }
    return true;
  });
  return cloud;
}

double coverage(const OrbitCloud& cloud, const CoverageConfig& cfg) {
  CellGrid grid(cfg);
  for (const auto& z : cloud.points) grid.mark(z);
  return static_cast<double>(grid.covered.size()) / static_cast<double>(grid.total());
}

CoverageResult orbit_coverage(const AffinePresentation<BigComplex>& g,
                              const std::vector<BigComplex>& x, const CoverageConfig& cfg) {
  DoubleGroup d = build_group(g, cfg.exponent_bound);
  std::vector<std::complex<double>> x0(g.n);
  for (int i = 0; i < g.n; ++i) x0[i] = {x[i].re.to_double(), x[i].im.to_double()};

  CoverageResult res;
  CellGrid grid(cfg);
  std::vector<std::complex<double>> y;
  for_each_word(d.p, cfg, [&](const std::vector<long>& w) {
    ++res.words_evaluated;
    if (eval_word(d, w, cfg.exponent_bound, x0, y)) {
      if (grid.mark(y)) ++res.points_in_box;
    } else {
      ++res.overflow_dropped;
    }
    return true;
  });
  res.covered_cells = static_cast<long long>(grid.covered.size());
  res.fraction = static_cast<double>(res.covered_cells) / static_cast<double>(grid.total());
  return res;
}

void write_orbit_csv(std::ostream& os, const OrbitCloud& cloud) {
  for (size_t i = 0; i < cloud.points.size(); ++i) {
    for (size_t k = 0; k < cloud.words[i].size(); ++k) os << cloud.words[i][k] << ",";
    const auto& z = cloud.points[i];
    for (size_t c = 0; c < z.size(); ++c) {
      os << z[c].real() << "," << z[c].imag();
      os << (c + 1 == z.size() ? "\n" : ",");
    }
  }
}

void write_cell_histogram_csv(std::ostream& os, const OrbitCloud& cloud,
                              const CoverageConfig& cfg) {
  const int cells = cfg.cells_per_axis();
  std::map<std::vector<int>, long long> hist;
  for (const auto& z : cloud.points) {
    std::vector<int> idx;
    bool inside = true;
    const size_t n = z.size();
    for (size_t c = 0; c < 2 * n && inside; ++c) {
      double v = c < n ? z[c].real() : z[c - n].imag();
      auto [lo, hi] = cfg.box[c];
      if (v < lo || v > hi) {
        inside = false;
        break;
      }
      int cell = static_cast<int>((v - lo) / (hi - lo) * cells);
      if (cell >= cells) cell = cells - 1;
      idx.push_back(cell);
    }
    if (inside) ++hist[idx];
  }
  for (const auto& [idx, count] : hist) {
    for (int c : idx) os << c << ",";
    os << count << "\n";
  }
}

}  // namespace hyperorbit
