#ifndef HYPERORBIT_RATIONAL_HPP
#define HYPERORBIT_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperorbit {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// "p/q" or "p"; throws std::invalid_argument on malformed input or q == 0.
Rational parse_rational(const std::string& s);

std::string rational_to_string(const Rational& q);

// Scales a nonzero rational vector to a primitive integer vector (gcd 1).
// The first nonzero entry keeps its sign.
std::vector<BigInt> primitive_integer_vector(const std::vector<Rational>& v);

inline bool is_zero(const Rational& q) { return q == 0; }
inline Rational inv(const Rational& q) {
  if (q == 0) throw std::domain_error("rational division by zero");
  return Rational(1) / q;
}

}  // namespace hyperorbit

#endif
