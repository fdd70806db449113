#pragma once

// Exact scalars. Everything in the library is computed over the rationals;
// GMP's mpq_class keeps values in canonical form (reduced, positive
// denominator) after every arithmetic operation.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace minkval {

using Rational = mpq_class;
using Integer = mpz_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (rational literals, JSON documents, CLI flags).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Operands living in different ambient dimensions, or unsupported ones.
class DimensionError : public Error {
 public:
  using Error::Error;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

/// Parses "p", "-p", "+p" or "p/q". Decimal notation is rejected so that no
/// value is ever silently rounded on the way in.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

inline Rational abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

inline int sign(const Rational& value) { return sgn(value); }

}  // namespace minkval
