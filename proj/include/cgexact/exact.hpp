#pragma once

// Exact integer and rational value types used throughout the library.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace cgexact {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when a caller passes indices or arguments outside an operation's domain.
class DomainError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal self-check fails. Indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Wire format: lowest terms, sign on the numerator, denominator omitted when 1.
inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Parses "p" or "p/q" (optional leading '-'). Throws DomainError on malformed input.
Rational parse_rational(std::string_view text);

/// Decimal approximation with `digits` significant fractional digits, for display only.
std::string to_decimal(const Rational& q, int digits);

/// Returns the exact rational square root of q when q is the square of a rational.
bool exact_sqrt(const Rational& q, Rational& root);

}  // namespace cgexact
