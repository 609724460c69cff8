// Exact scalar arithmetic. Rationals are GMP mpq values, kept canonical
// (gcd(|num|, den) = 1, den > 0) by the mpq layer; the helpers here add
// strict "p/q" string parsing and printing for the document format.
#ifndef NOVBOTT_RATIONAL_HPP
#define NOVBOTT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace novbott {

using Rational = mpq_class;
using BigInt = mpz_class;

// Parses "p", "-p", "p/q" with decimal digits only; canonicalizes.
// Throws invalid_input on junk or a zero denominator.
Rational parse_rational(const std::string& text);

// Canonical "p" or "p/q" rendering.
std::string rational_to_string(const Rational& value);

// q^e for integer e; e < 0 requires q != 0 (throws invalid_input otherwise).
Rational rational_pow(const Rational& base, long exponent);

}  // namespace novbott

#endif
