#ifndef HYPERORBIT_SURD_HPP
#define HYPERORBIT_SURD_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperorbit/rational.hpp"

namespace hyperorbit {

struct DivisionByZeroError : std::runtime_error {
  DivisionByZeroError() : std::runtime_error("division by zero in exact arithmetic") {}
};

// Declared radicands d1 < d2 < ... < dk, each squarefree and >= 2.
// Used to validate input files; arithmetic itself is self-describing.
class SurdBasis {
 public:
  SurdBasis() = default;
  explicit SurdBasis(std::vector<long long> radicands);

  const std::vector<long long>& radicands() const { return radicands_; }
  bool contains(long long d) const;
  bool empty() const { return radicands_.empty(); }

  static bool is_squarefree(long long d);

 private:
  std::vector<long long> radicands_;
};

/**
 * Element of a multiquadratic field Q(sqrt(d1),...,sqrt(dk)).
 *
 * Stored as a finite sum  sum_d  c_d * sqrt(d)  over squarefree integers d,
 * with d = 1 the rational term. The representation is closed under +, *, and
 * inversion, and the zero test is exact (empty coordinate map).
 */
class MultiquadElem {
 public:
  MultiquadElem() = default;
  MultiquadElem(const Rational& r);          // NOLINT: implicit by design
  MultiquadElem(long long n) : MultiquadElem(Rational(n)) {}

  // c * sqrt(d) for arbitrary d >= 1; square factors of d are pulled out.
  static MultiquadElem surd(long long d, const Rational& c = 1);

  bool is_zero() const { return coords_.empty(); }
  bool is_rational() const;
  // Rational value; requires is_rational().
  Rational rational_part() const;

  // Coefficient of sqrt(d) (d squarefree; 1 = rational term).
  Rational coeff(long long d) const;
  const std::map<long long, Rational>& coords() const { return coords_; }

  MultiquadElem operator-() const;
  MultiquadElem& operator+=(const MultiquadElem& o);
  MultiquadElem& operator-=(const MultiquadElem& o);
  friend MultiquadElem operator+(MultiquadElem a, const MultiquadElem& b) { return a += b; }
  friend MultiquadElem operator-(MultiquadElem a, const MultiquadElem& b) { return a -= b; }
  friend MultiquadElem operator*(const MultiquadElem& a, const MultiquadElem& b);
  friend bool operator==(const MultiquadElem& a, const MultiquadElem& b) {
    return a.coords_ == b.coords_;
  }

  // Multiplicative inverse by iterated conjugation over the primes occurring
  // in the monomial keys. Throws DivisionByZeroError on zero.
  MultiquadElem inverse() const;

  // Flips the sign of every term whose monomial is divisible by p.
  MultiquadElem conjugate_at_prime(long long p) const;

  std::string to_string() const;

 private:
  void set_coeff(long long d, const Rational& c);
  std::map<long long, Rational> coords_;
};

inline bool is_zero(const MultiquadElem& x) { return x.is_zero(); }
inline MultiquadElem inv(const MultiquadElem& x) { return x.inverse(); }

}  // namespace hyperorbit

#endif
