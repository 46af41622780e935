#include "hyperorbit/lll.hpp"

#include <stdexcept>

namespace hyperorbit {

namespace {

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

BigInt round_nearest(const Rational& q) {
  // floor(q + 1/2)
  Rational t = q + Rational(1, 2);
  BigInt num = BigInt(numerator(t)), den = BigInt(denominator(t));
  BigInt fl = num / den;
  if (num < 0 && fl * den != num) --fl;
  return fl;
}

struct GramSchmidt {
  std::vector<std::vector<Rational>> star;  // b*_i
  std::vector<std::vector<Rational>> mu;    // mu[i][j], j < i
  std::vector<Rational> norm2;              // |b*_i|^2

  void compute(const std::vector<std::vector<BigInt>>& b) {
    const size_t n = b.size(), d = b[0].size();
    star.assign(n, std::vector<Rational>(d, 0));
    mu.assign(n, std::vector<Rational>(n, 0));
    norm2.assign(n, 0);
    for (size_t i = 0; i < n; ++i) {
      for (size_t k = 0; k < d; ++k) star[i][k] = Rational(b[i][k]);
      for (size_t j = 0; j < i; ++j) {
        if (norm2[j] == 0) throw std::invalid_argument("dependent rows in LLL input");
        std::vector<Rational> bi(d);
        for (size_t k = 0; k < d; ++k) bi[k] = Rational(b[i][k]);
        mu[i][j] = dot(bi, star[j]) / norm2[j];
        for (size_t k = 0; k < d; ++k) star[i][k] -= mu[i][j] * star[j][k];
      }
      norm2[i] = dot(star[i], star[i]);
    }
  }
};

}  // namespace

std::vector<std::vector<BigInt>> lll_reduce(std::vector<std::vector<BigInt>> basis) {
  const size_t n = basis.size();
  if (n <= 1) return basis;
  const Rational delta(99, 100);

  GramSchmidt gs;
  gs.compute(basis);

  size_t k = 1;
  size_t guard = 0;
  const size_t guard_max = 100000;
  while (k < n) {
    if (++guard > guard_max) throw std::runtime_error("LLL iteration budget exceeded");
    // size reduction
    for (size_t j = k; j-- > 0;) {
      BigInt c = round_nearest(gs.mu[k][j]);
      if (c != 0) {
        for (size_t t = 0; t < basis[k].size(); ++t) basis[k][t] -= c * basis[j][t];
        gs.compute(basis);
      }
    }
    // Lovasz condition
    Rational lhs = gs.norm2[k];
    Rational rhs = (delta - gs.mu[k][k - 1] * gs.mu[k][k - 1]) * gs.norm2[k - 1];
    if (lhs >= rhs) {
      ++k;
    } else {
      std::swap(basis[k], basis[k - 1]);
      gs.compute(basis);
      k = k > 1 ? k - 1 : 1;
    }
  }
  return basis;
}

}  // namespace hyperorbit
