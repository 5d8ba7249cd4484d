#pragma once

// Exact scalar types shared by every module: GMP integers and rationals,
// plus the "p/q" text form used in all persisted output.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace cremona {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown for malformed text input (classes, words, rationals, configurations).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when two objects built over different blow-up signatures meet.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// "p/q" with q omitted when 1; always canonical (reduced, positive denominator).
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// p/q reduced to canonical form; throws std::domain_error for q = 0.
Rational ratio(const Integer& p, const Integer& q);

/// Parses "p", "-p" or "p/q" with optional surrounding whitespace.
Rational parse_rational(std::string_view text);

/// Number of bits in |z| (0 for zero).
std::size_t bit_size(const Integer& z);

int sign(const Rational& q);
int sign(const Integer& z);

double to_double(const Rational& q);

} // namespace cremona
