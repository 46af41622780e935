#ifndef HYPERORBIT_BIGFLOAT_HPP
#define HYPERORBIT_BIGFLOAT_HPP

#include <mpfr.h>

#include <string>
#include <utility>

#include "hyperorbit/exact.hpp"
#include "hyperorbit/rational.hpp"

namespace hyperorbit {

/**
 * Arbitrary-precision binary float (MPFR, round-to-nearest). Precision in
 * bits is fixed at construction; binary operations round at the larger of
 * the operands' precisions.
 */
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t prec = 64) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  BigFloat(const BigFloat& o) {
    mpfr_init2(v_, o.prec());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigFloat(BigFloat&& o) noexcept {
    mpfr_init2(v_, o.prec());
    mpfr_swap(v_, o.v_);
  }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, o.prec());
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(v_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  static BigFloat from_double(double d, mpfr_prec_t prec);
  static BigFloat from_long(long n, mpfr_prec_t prec);
  static BigFloat from_rational(const Rational& q, mpfr_prec_t prec);
  static BigFloat pi(mpfr_prec_t prec);
  static BigFloat pow2(long e, mpfr_prec_t prec);  // 2^e
  static BigFloat sqrt_ui(unsigned long d, mpfr_prec_t prec);

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
  BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
  BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }
  BigFloat& operator/=(const BigFloat& o) { return *this = *this / o; }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_); }

  bool is_zero() const { return mpfr_zero_p(v_); }
  int sign() const { return mpfr_sgn(v_); }

  BigFloat abs() const;
  BigFloat sqrt() const;
  BigFloat exp() const;
  BigFloat log() const;  // requires positive argument

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  BigFloat at_prec(mpfr_prec_t p) const {
    BigFloat r(p);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }
  BigInt round_to_integer() const;
  std::string to_hex_string() const;   // lossless "%Ra" form
  std::string to_decimal_string(size_t digits = 20) const;

 private:
  mpfr_t v_;
};

BigFloat atan2(const BigFloat& y, const BigFloat& x);
BigFloat hypot(const BigFloat& x, const BigFloat& y);
inline BigFloat abs(const BigFloat& x) { return x.abs(); }
inline bool is_zero(const BigFloat& x) { return x.is_zero(); }
inline BigFloat inv(const BigFloat& x) { return BigFloat::from_long(1, x.prec()) / x; }

struct BigComplex {
  BigFloat re, im;

  explicit BigComplex(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
  BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

  mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }
  static BigComplex from_double(double r, double i, mpfr_prec_t prec) {
    return {BigFloat::from_double(r, prec), BigFloat::from_double(i, prec)};
  }
  static BigComplex from_long(long n, mpfr_prec_t prec) {
    return {BigFloat::from_long(n, prec), BigFloat::from_long(0, prec)};
  }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  BigComplex conj() const { return {re, -im}; }
  BigFloat abs() const { return hypot(re, im); }

  BigComplex operator-() const { return {-re, -im}; }
  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend BigComplex operator*(const BigComplex& a, const BigFloat& s) { return {a.re * s, a.im * s}; }
  friend BigComplex operator*(const BigFloat& s, const BigComplex& a) { return a * s; }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
  BigComplex& operator+=(const BigComplex& o) { return *this = *this + o; }
  BigComplex& operator-=(const BigComplex& o) { return *this = *this - o; }
  BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }

  BigComplex inverse() const;
  BigComplex exp() const;
  BigComplex log() const;  // principal branch, Im in (-pi, pi]

  BigComplex at_prec(mpfr_prec_t p) const { return {re.at_prec(p), im.at_prec(p)}; }
  std::string to_string() const;
};

inline bool is_zero(const BigComplex& x) { return x.is_zero(); }
inline BigComplex inv(const BigComplex& x) { return x.inverse(); }
inline BigFloat abs(const BigComplex& x) { return x.abs(); }

// Numeric evaluation of exact values; |result - x| <= 2^(3-prec) * (1+|x|)
// (constants are evaluated with 32 guard bits).
BigFloat to_numeric(const ExactReal& x, mpfr_prec_t prec);
BigComplex to_numeric(const ExactComplex& x, mpfr_prec_t prec);

}  // namespace hyperorbit

#endif
