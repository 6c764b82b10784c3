#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace torsion {

/// Arbitrary-precision rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using BigInt = mpz_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "p", "-p" or "p/q". Throws InvalidArgument on malformed input or q == 0.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);
std::string to_string(const BigInt& z);

double to_double(const Rational& r);

}  // namespace torsion
