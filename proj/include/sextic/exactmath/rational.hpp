#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sextic {

using Integer = mpz_class;
using Rational = mpq_class;
using Complex = std::complex<double>;

/// num/den in lowest terms; den must be nonzero.
Rational make_rational(long num, long den = 1);
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p" or "p/q" (decimal integers). Throws DomainError.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is one, otherwise "p/q".
std::string to_string(const Rational& r);

double to_double(const Rational& r);
Complex to_complex(const Rational& r);

Rational pow(const Rational& base, int exponent);

/// base^exponent as an exact integer-valued rational, e.g. power(2, 52).
Rational power(long base, unsigned exponent);

/// Exact square root when r is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

}  // namespace sextic
