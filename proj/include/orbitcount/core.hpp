#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace orbitcount {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Index into a one-indexed sequence, or an argument to an arithmetic function.
using Index = std::uint64_t;

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A sequence was handed to an operation expecting a different view.
class ViewError : public Error {
 public:
  using Error::Error;
};

// Input shorter than the truncation an operation needs.
class TruncationError : public Error {
 public:
  using Error::Error;
};

// Argument outside an operation's domain (n = 0, k = 0, bad parameter, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

inline Integer ipow(const Integer& base, Index exponent) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

inline Integer ipow(Index base, Index exponent) {
  return ipow(Integer(base), exponent);
}

inline std::string to_string(const Integer& x) { return x.str(); }

inline std::string to_string(const Rational& x) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(x) == 1) return numerator(x).str();
  return numerator(x).str() + "/" + denominator(x).str();
}

}  // namespace orbitcount
