#include "hyperorbit/surd.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hyperorbit {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
}

std::string rational_to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

std::vector<BigInt> primitive_integer_vector(const std::vector<Rational>& v) {
  BigInt lcm_den = 1;
  for (const auto& q : v) lcm_den = boost::multiprecision::lcm(lcm_den, BigInt(denominator(q)));
  std::vector<BigInt> out;
  out.reserve(v.size());
  BigInt g = 0;
  for (const auto& q : v) {
    BigInt z = BigInt(numerator(q)) * (lcm_den / BigInt(denominator(q)));
    g = boost::multiprecision::gcd(g, z);
    out.push_back(z);
  }
  if (g == 0) throw std::invalid_argument("primitive scaling of the zero vector");
  for (auto& z : out) z /= g;
  return out;
}

bool SurdBasis::is_squarefree(long long d) {
  if (d < 1) return false;
  for (long long p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

SurdBasis::SurdBasis(std::vector<long long> radicands) : radicands_(std::move(radicands)) {
  std::sort(radicands_.begin(), radicands_.end());
  for (size_t i = 0; i < radicands_.size(); ++i) {
    long long d = radicands_[i];
    if (d < 2) throw std::invalid_argument("radicand must be >= 2");
    if (!is_squarefree(d)) throw std::invalid_argument("radicand not squarefree: " + std::to_string(d));
    if (i > 0 && radicands_[i - 1] == d)
      throw std::invalid_argument("duplicate radicand: " + std::to_string(d));
  }
}

bool SurdBasis::contains(long long d) const {
  return std::binary_search(radicands_.begin(), radicands_.end(), d);
}

MultiquadElem::MultiquadElem(const Rational& r) {
  if (r != 0) coords_[1] = r;
}

void MultiquadElem::set_coeff(long long d, const Rational& c) {
  if (c == 0)
    coords_.erase(d);
  else
    coords_[d] = c;
}

MultiquadElem MultiquadElem::surd(long long d, const Rational& c) {
  if (d < 1) throw std::invalid_argument("radicand must be positive");
  // pull out the square part: d = s^2 * f with f squarefree
  long long s = 1, f = d;
  for (long long p = 2; p * p <= f; ++p) {
    while (f % (p * p) == 0) {
      f /= p * p;
      s *= p;
    }
  }
  MultiquadElem out;
  out.set_coeff(f, c * s);
  return out;
}

bool MultiquadElem::is_rational() const {
  return coords_.empty() || (coords_.size() == 1 && coords_.begin()->first == 1);
}

Rational MultiquadElem::rational_part() const {
  if (!is_rational()) throw std::logic_error("not a rational element");
  return coords_.empty() ? Rational(0) : coords_.begin()->second;
}

Rational MultiquadElem::coeff(long long d) const {
  auto it = coords_.find(d);
  return it == coords_.end() ? Rational(0) : it->second;
}

MultiquadElem MultiquadElem::operator-() const {
  MultiquadElem out;
  for (const auto& [d, c] : coords_) out.coords_[d] = -c;
  return out;
}

MultiquadElem& MultiquadElem::operator+=(const MultiquadElem& o) {
  for (const auto& [d, c] : o.coords_) set_coeff(d, coeff(d) + c);
  return *this;
}

MultiquadElem& MultiquadElem::operator-=(const MultiquadElem& o) {
  for (const auto& [d, c] : o.coords_) set_coeff(d, coeff(d) - c);
  return *this;
}

MultiquadElem operator*(const MultiquadElem& a, const MultiquadElem& b) {
  MultiquadElem out;
  for (const auto& [d1, c1] : a.coords_) {
    for (const auto& [d2, c2] : b.coords_) {
      // sqrt(d1)*sqrt(d2) = g * sqrt(d1*d2/g^2) with g = gcd(d1,d2)
      long long g = std::gcd(d1, d2);
      long long d = (d1 / g) * (d2 / g);
      out.set_coeff(d, out.coeff(d) + c1 * c2 * g);
    }
  }
  return out;
}

MultiquadElem MultiquadElem::conjugate_at_prime(long long p) const {
  MultiquadElem out;
  for (const auto& [d, c] : coords_) out.coords_[d] = (d % p == 0) ? -c : c;
  return out;
}

MultiquadElem MultiquadElem::inverse() const {
  if (is_zero()) throw DivisionByZeroError();
  if (is_rational()) return MultiquadElem(Rational(1) / rational_part());
  // smallest prime dividing some monomial key
  long long p = 0;
  for (const auto& [d, c] : coords_) {
    if (d == 1) continue;
    long long q = 2;
    while (q * q <= d && d % q != 0) ++q;
    long long fac = (q * q <= d) ? q : d;
    p = (p == 0) ? fac : std::min(p, fac);
  }
  MultiquadElem conj = conjugate_at_prime(p);
  MultiquadElem norm = (*this) * conj;  // no sqrt(p) factor remains in norm
  return conj * norm.inverse();
}

std::string MultiquadElem::to_string() const {
  if (coords_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, c] : coords_) {
    if (!first) os << (c > 0 ? " + " : " - ");
    const Rational ac = (!first && c < 0) ? Rational(-c) : c;
    first = false;
    if (d == 1) {
      os << ac;
    } else {
      if (ac != 1) os << ac << "*";
      os << "sqrt(" << d << ")";
    }
  }
  return os.str();
}

}  // namespace hyperorbit
