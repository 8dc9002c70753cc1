#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace homlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& x) { return x.str(); }

/// "p/q" in lowest terms, or "p" when q == 1.
inline std::string to_string(const Rational& x) {
  const BigInt num = boost::multiprecision::numerator(x);
  const BigInt den = boost::multiprecision::denominator(x);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

inline BigInt power(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

}  // namespace homlab
