#include "hyperorbit/bigfloat.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperorbit {

BigFloat BigFloat::from_double(double d, mpfr_prec_t prec) {
  BigFloat x(prec);
  mpfr_set_d(x.v_, d, MPFR_RNDN);
  return x;
}

BigFloat BigFloat::from_long(long n, mpfr_prec_t prec) {
  BigFloat x(prec);
  mpfr_set_si(x.v_, n, MPFR_RNDN);
  return x;
}

BigFloat BigFloat::from_rational(const Rational& q, mpfr_prec_t prec) {
  BigFloat x(prec);
  mpfr_set_q(x.v_, q.backend().data(), MPFR_RNDN);
  return x;
}

BigFloat BigFloat::pi(mpfr_prec_t prec) {
  BigFloat x(prec);
  mpfr_const_pi(x.v_, MPFR_RNDN);
  return x;
}

BigFloat BigFloat::pow2(long e, mpfr_prec_t prec) {
  BigFloat x(prec);
  mpfr_set_ui_2exp(x.v_, 1, e, MPFR_RNDN);
  return x;
}

BigFloat BigFloat::sqrt_ui(unsigned long d, mpfr_prec_t prec) {
  BigFloat x(prec);
  mpfr_sqrt_ui(x.v_, d, MPFR_RNDN);
  return x;
}

namespace {
mpfr_prec_t joint_prec(const BigFloat& a, const BigFloat& b) {
  return std::max(a.prec(), b.prec());
}
}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint_prec(a, b));
  mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint_prec(a, b));
  mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint_prec(a, b));
  mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(joint_prec(a, b));
  mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
  return r;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(prec());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::abs() const {
  BigFloat r(prec());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::sqrt() const {
  BigFloat r(prec());
  mpfr_sqrt(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::exp() const {
  BigFloat r(prec());
  mpfr_exp(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::log() const {
  BigFloat r(prec());
  mpfr_log(r.v_, v_, MPFR_RNDN);
  return r;
}

BigInt BigFloat::round_to_integer() const {
  mpfr_t t;
  mpfr_init2(t, std::max<mpfr_prec_t>(prec(), 64));
  mpfr_round(t, v_);
  BigInt z;
  mpfr_get_z(z.backend().data(), t, MPFR_RNDN);
  mpfr_clear(t);
  return z;
}

std::string BigFloat::to_hex_string() const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%Ra", v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

std::string BigFloat::to_decimal_string(size_t digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

BigFloat atan2(const BigFloat& y, const BigFloat& x) {
  BigFloat r(std::max(y.prec(), x.prec()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
  BigFloat r(std::max(y.prec(), x.prec()));
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) { return a * b.inverse(); }

BigComplex BigComplex::inverse() const {
  BigFloat n = re * re + im * im;
  if (n.is_zero()) throw std::domain_error("inverse of numeric zero");
  return {re / n, -(im / n)};
}

BigComplex BigComplex::exp() const {
  mpfr_prec_t p = prec();
  BigFloat mag = re.exp();
  BigFloat c(p), s(p);
  mpfr_sin_cos(s.raw(), c.raw(), im.raw(), MPFR_RNDN);
  return {mag * c, mag * s};
}

BigComplex BigComplex::log() const {
  if (is_zero()) throw std::domain_error("log of numeric zero");
  return {abs().log(), atan2(im, re)};
}

std::string BigComplex::to_string() const {
  return re.to_decimal_string() + (im.sign() < 0 ? " - " : " + ") +
         im.abs().to_decimal_string() + "i";
}

namespace {

// Evaluates a pi-polynomial at guard precision by Horner over pi.
BigFloat eval_poly(const ExactPoly& p, const BigFloat& pi_val, mpfr_prec_t gprec) {
  BigFloat acc(gprec);
  for (int j = p.degree(); j >= 0; --j) {
    acc = acc * pi_val;
    BigFloat term(gprec);
    const MultiquadElem cj = p.coeff(j);
    for (const auto& [d, q] : cj.coords()) {
      BigFloat t = BigFloat::from_rational(q, gprec);
      if (d > 1) t = t * BigFloat::sqrt_ui(static_cast<unsigned long>(d), gprec);
      term += t;
    }
    acc += term;
  }
  return acc;
}

}  // namespace

BigFloat to_numeric(const ExactReal& x, mpfr_prec_t prec) {
  const mpfr_prec_t gprec = prec + 32;
  BigFloat pi_val = BigFloat::pi(gprec);
  BigFloat num = eval_poly(x.num(), pi_val, gprec);
  BigFloat den = eval_poly(x.den(), pi_val, gprec);
  BigFloat q = num / den;
  BigFloat out(prec);
  mpfr_set(out.raw(), q.raw(), MPFR_RNDN);
  return out;
}

BigComplex to_numeric(const ExactComplex& x, mpfr_prec_t prec) {
  return {to_numeric(x.re, prec), to_numeric(x.im, prec)};
}

}  // namespace hyperorbit
