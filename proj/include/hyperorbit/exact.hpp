#ifndef HYPERORBIT_EXACT_HPP
#define HYPERORBIT_EXACT_HPP

#include <map>
#include <string>
#include <vector>

#include "hyperorbit/surd.hpp"

namespace hyperorbit {

struct WindowExceededError : std::runtime_error {
  explicit WindowExceededError(int power)
      : std::runtime_error("pi-power " + std::to_string(power) + " outside requested window") {}
};

// Dense polynomial in the symbol pi with multiquadratic coefficients.
// coeffs[j] multiplies pi^j; trailing zeros are trimmed (zero poly = empty).
class ExactPoly {
 public:
  ExactPoly() = default;
  explicit ExactPoly(std::vector<MultiquadElem> coeffs);
  static ExactPoly constant(const MultiquadElem& c);
  static ExactPoly pi();

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const MultiquadElem& leading() const;
  MultiquadElem coeff(int j) const;
  const std::vector<MultiquadElem>& coeffs() const { return coeffs_; }

  ExactPoly operator-() const;
  friend ExactPoly operator+(const ExactPoly& a, const ExactPoly& b);
  friend ExactPoly operator-(const ExactPoly& a, const ExactPoly& b);
  friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b);
  friend bool operator==(const ExactPoly& a, const ExactPoly& b) { return a.coeffs_ == b.coeffs_; }

  ExactPoly scaled(const MultiquadElem& c) const;
  // Euclidean division; the divisor's leading coefficient is inverted exactly.
  static void divmod(const ExactPoly& a, const ExactPoly& b, ExactPoly& q, ExactPoly& r);
  static ExactPoly gcd(ExactPoly a, ExactPoly b);  // monic, gcd(0,0) = 0
  ExactPoly monic() const;

 private:
  void trim();
  std::vector<MultiquadElem> coeffs_;
};

/**
 * Element of Q(sqrt(d1),...,sqrt(dk))(pi): a rational function num/den in pi
 * over the multiquadratic field, kept in canonical form (den monic, nonzero,
 * gcd(num, den) = 1). Canonical form makes equality and the zero test exact;
 * pi is treated as transcendental over the coefficient field.
 */
class ExactReal {
 public:
  ExactReal() : num_(), den_(ExactPoly::constant(MultiquadElem(1))) {}
  ExactReal(const Rational& r);  // NOLINT: implicit by design
  ExactReal(long long n) : ExactReal(Rational(n)) {}
  ExactReal(const MultiquadElem& c);  // NOLINT
  ExactReal(ExactPoly num, ExactPoly den);

  static ExactReal pi();
  static ExactReal sqrt_int(long long d);

  bool is_zero() const { return num_.is_zero(); }
  const ExactPoly& num() const { return num_; }
  const ExactPoly& den() const { return den_; }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_rational() const;
  Rational rational_value() const;

  ExactReal operator-() const;
  friend ExactReal operator+(const ExactReal& a, const ExactReal& b);
  friend ExactReal operator-(const ExactReal& a, const ExactReal& b);
  friend ExactReal operator*(const ExactReal& a, const ExactReal& b);
  friend ExactReal operator/(const ExactReal& a, const ExactReal& b);
  ExactReal& operator+=(const ExactReal& o) { return *this = *this + o; }
  ExactReal& operator-=(const ExactReal& o) { return *this = *this - o; }
  ExactReal& operator*=(const ExactReal& o) { return *this = *this * o; }
  friend bool operator==(const ExactReal& a, const ExactReal& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  ExactReal inverse() const;

  std::string to_string() const;

 private:
  void canonicalize();
  ExactPoly num_, den_;
};

inline bool is_zero(const ExactReal& x) { return x.is_zero(); }
inline ExactReal inv(const ExactReal& x) { return x.inverse(); }

// Monomial pi^pi_pow * sqrt(surd); surd = 1 is the rational monomial.
struct MonomialKey {
  int pi_pow;
  long long surd;
  auto operator<=>(const MonomialKey&) const = default;
};

/**
 * Exact rational coordinates of a pi-polynomial x over the monomial basis
 * pi^j * sqrt(d). Requires the caller to have cleared denominators
 * (x.is_polynomial()); throws WindowExceededError if a pi-power falls
 * outside [window_lo, window_hi].
 */
std::map<MonomialKey, Rational> monomial_coords(const ExactReal& x, int window_lo, int window_hi);

struct ExactComplex {
  ExactReal re, im;

  ExactComplex() = default;
  ExactComplex(ExactReal r) : re(std::move(r)) {}  // NOLINT
  ExactComplex(ExactReal r, ExactReal i) : re(std::move(r)), im(std::move(i)) {}
  ExactComplex(long long n) : re(n) {}  // NOLINT
  static ExactComplex i() { return ExactComplex(ExactReal(0), ExactReal(1)); }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  ExactComplex conj() const { return {re, -im}; }

  ExactComplex operator-() const { return {-re, -im}; }
  friend ExactComplex operator+(const ExactComplex& a, const ExactComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ExactComplex operator-(const ExactComplex& a, const ExactComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ExactComplex operator/(const ExactComplex& a, const ExactComplex& b) {
    return a * b.inverse();
  }
  ExactComplex& operator+=(const ExactComplex& o) { return *this = *this + o; }
  ExactComplex& operator-=(const ExactComplex& o) { return *this = *this - o; }
  ExactComplex& operator*=(const ExactComplex& o) { return *this = *this * o; }
  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re == b.re && a.im == b.im;
  }

  ExactComplex inverse() const;

  std::string to_string() const;
};

inline bool is_zero(const ExactComplex& x) { return x.is_zero(); }
inline ExactComplex inv(const ExactComplex& x) { return x.inverse(); }

}  // namespace hyperorbit

#endif
