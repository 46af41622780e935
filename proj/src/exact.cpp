#include "hyperorbit/exact.hpp"

#include <sstream>

namespace hyperorbit {

ExactPoly::ExactPoly(std::vector<MultiquadElem> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

ExactPoly ExactPoly::constant(const MultiquadElem& c) {
  ExactPoly p;
  if (!c.is_zero()) p.coeffs_.push_back(c);
  return p;
}

ExactPoly ExactPoly::pi() {
  ExactPoly p;
  p.coeffs_ = {MultiquadElem(0), MultiquadElem(1)};
  return p;
}

void ExactPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const MultiquadElem& ExactPoly::leading() const {
  if (coeffs_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

MultiquadElem ExactPoly::coeff(int j) const {
  if (j < 0 || j >= static_cast<int>(coeffs_.size())) return MultiquadElem();
  return coeffs_[j];
}

ExactPoly ExactPoly::operator-() const {
  ExactPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

ExactPoly operator+(const ExactPoly& a, const ExactPoly& b) {
  std::vector<MultiquadElem> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (size_t j = 0; j < c.size(); ++j) c[j] = a.coeff(static_cast<int>(j)) + b.coeff(static_cast<int>(j));
  return ExactPoly(std::move(c));
}

ExactPoly operator-(const ExactPoly& a, const ExactPoly& b) { return a + (-b); }

ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
  if (a.is_zero() || b.is_zero()) return ExactPoly();
  std::vector<MultiquadElem> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return ExactPoly(std::move(c));
}

ExactPoly ExactPoly::scaled(const MultiquadElem& c) const {
  if (c.is_zero()) return ExactPoly();
  ExactPoly out = *this;
  for (auto& x : out.coeffs_) x = x * c;
  return out;
}

void ExactPoly::divmod(const ExactPoly& a, const ExactPoly& b, ExactPoly& q, ExactPoly& r) {
  if (b.is_zero()) throw DivisionByZeroError();
  r = a;
  q = ExactPoly();
  const MultiquadElem lead_inv = b.leading().inverse();
  std::vector<MultiquadElem> qc;
  if (r.degree() >= b.degree()) qc.assign(r.degree() - b.degree() + 1, MultiquadElem());
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    MultiquadElem f = r.leading() * lead_inv;
    qc[shift] = f;
    // r -= f * pi^shift * b
    std::vector<MultiquadElem> sub(shift + b.coeffs_.size());
    for (size_t j = 0; j < b.coeffs_.size(); ++j) sub[shift + j] = b.coeffs_[j] * f;
    r = r - ExactPoly(std::move(sub));
  }
  q = ExactPoly(std::move(qc));
}

ExactPoly ExactPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

ExactPoly ExactPoly::gcd(ExactPoly a, ExactPoly b) {
  while (!b.is_zero()) {
    ExactPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExactReal::ExactReal(const Rational& r)
    : num_(ExactPoly::constant(MultiquadElem(r))), den_(ExactPoly::constant(MultiquadElem(1))) {}

ExactReal::ExactReal(const MultiquadElem& c)
    : num_(ExactPoly::constant(c)), den_(ExactPoly::constant(MultiquadElem(1))) {}

ExactReal::ExactReal(ExactPoly num, ExactPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZeroError();
  canonicalize();
}

ExactReal ExactReal::pi() { return ExactReal(ExactPoly::pi(), ExactPoly::constant(MultiquadElem(1))); }

ExactReal ExactReal::sqrt_int(long long d) { return ExactReal(MultiquadElem::surd(d)); }

void ExactReal::canonicalize() {
  if (num_.is_zero()) {
    den_ = ExactPoly::constant(MultiquadElem(1));
    return;
  }
  ExactPoly g = ExactPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    ExactPoly q, r;
    ExactPoly::divmod(num_, g, q, r);
    num_ = q;
    ExactPoly::divmod(den_, g, q, r);
    den_ = q;
  }
  // normalize: monic denominator
  MultiquadElem s = den_.leading().inverse();
  num_ = num_.scaled(s);
  den_ = den_.scaled(s);
}

bool ExactReal::is_rational() const { return num_.degree() <= 0 && den_.degree() == 0 &&
                                             (num_.is_zero() || num_.leading().is_rational()); }

Rational ExactReal::rational_value() const {
  if (!is_rational()) throw std::logic_error("not a rational value");
  if (num_.is_zero()) return 0;
  return num_.coeff(0).rational_part() / den_.coeff(0).rational_part();
}

ExactReal ExactReal::operator-() const {
  ExactReal out = *this;
  out.num_ = -out.num_;
  return out;
}

ExactReal operator+(const ExactReal& a, const ExactReal& b) {
  return ExactReal(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ExactReal operator-(const ExactReal& a, const ExactReal& b) { return a + (-b); }

ExactReal operator*(const ExactReal& a, const ExactReal& b) {
  return ExactReal(a.num_ * b.num_, a.den_ * b.den_);
}

ExactReal operator/(const ExactReal& a, const ExactReal& b) { return a * b.inverse(); }

ExactReal ExactReal::inverse() const {
  if (is_zero()) throw DivisionByZeroError();
  return ExactReal(den_, num_);
}

std::string ExactReal::to_string() const {
  auto poly_str = [](const ExactPoly& p) {
    if (p.is_zero()) return std::string("0");
    std::ostringstream os;
    bool first = true;
    for (int j = p.degree(); j >= 0; --j) {
      MultiquadElem c = p.coeff(j);
      if (c.is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      bool need_paren = c.coords().size() > 1;
      if (j == 0) {
        os << c.to_string();
      } else {
        if (need_paren) os << "(" << c.to_string() << ")";
        else os << c.to_string();
        os << "*pi";
        if (j > 1) os << "^" << j;
      }
    }
    return os.str();
  };
  if (is_polynomial()) return poly_str(num_);
  return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
}

std::map<MonomialKey, Rational> monomial_coords(const ExactReal& x, int window_lo, int window_hi) {
  if (!x.is_polynomial())
    throw std::invalid_argument("monomial_coords requires a cleared (polynomial) numerator");
  // divide through by the constant denominator
  MultiquadElem den_inv = x.den().coeff(0).inverse();
  std::map<MonomialKey, Rational> out;
  for (int j = 0; j <= x.num().degree(); ++j) {
    MultiquadElem c = x.num().coeff(j) * den_inv;
    if (c.is_zero()) continue;
    if (j < window_lo || j > window_hi) throw WindowExceededError(j);
    for (const auto& [d, q] : c.coords()) out[{j, d}] = q;
  }
  return out;
}

ExactComplex ExactComplex::inverse() const {
  if (is_zero()) throw DivisionByZeroError();
  ExactReal n = re * re + im * im;  // nonzero: formally real subfield, sum of squares
  ExactReal ninv = n.inverse();
  return {re * ninv, -(im * ninv)};
}

std::string ExactComplex::to_string() const {
  if (im.is_zero()) return re.to_string();
  if (re.is_zero()) return "(" + im.to_string() + ")*i";
  return "(" + re.to_string() + ") + (" + im.to_string() + ")*i";
}

}  // namespace hyperorbit
