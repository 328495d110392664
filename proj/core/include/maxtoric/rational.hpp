#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace maxtoric {

/// Exact coefficient field of every polynomial in the library.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses `a`, `a/b` or a decimal literal such as `-1.25e-3` into an exact
/// rational. Decimal digits are taken literally, never through a double.
/// Throws ParseError on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// `a/b` in lowest terms, or `a` when the denominator is 1.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

/// Exact power with an integer (possibly negative) exponent. Throws
/// DomainError for a negative power of zero.
Rational pow(const Rational& base, std::int64_t exponent);

}  // namespace maxtoric
