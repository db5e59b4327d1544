#pragma once

#include <gmpxx.h>

#include <string>

#include "torsionforge/errors.hpp"

namespace torsionforge {

// Arbitrary-precision integers and rationals. Rationals are kept in canonical
// form: gcd(|num|, den) = 1, den > 0, zero is 0/1. GMP maintains this form
// through arithmetic; the constructors below enforce it at the boundaries.
using Integer = mpz_class;
using Rational = mpq_class;

// Canonical decimal form: "num/den", with "/den" omitted when den = 1.
std::string to_string(const Integer& z);
std::string to_string(const Rational& r);

// Strict parsers for the same form. Accept an optional leading '-', decimal
// digits, and at most one '/' followed by decimal digits. Throw ParseError on
// anything else (including a zero denominator).
Integer integer_from_string(const std::string& s);
Rational rational_from_string(const std::string& s);

// num/den in canonical form; den must be nonzero.
Rational make_rational(const Integer& num, const Integer& den);

inline Integer numerator(const Rational& r) { return r.get_num(); }
inline Integer denominator(const Rational& r) { return r.get_den(); }
inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// z^e and r^e for e >= 0.
Integer integer_pow(const Integer& z, unsigned long e);
Rational rational_pow(const Rational& r, unsigned long e);

}  // namespace torsionforge
