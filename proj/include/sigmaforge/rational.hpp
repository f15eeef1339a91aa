#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace sigmaforge {

/// Coefficient field. mpq_class keeps values canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when an input violates an operation's precondition.
class DomainError : public Error {
public:
  using Error::Error;
};

Rational make_rational(long num, long den = 1);

/// Parses "p" or "p/q" with optional leading sign. Throws DomainError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

} // namespace sigmaforge
