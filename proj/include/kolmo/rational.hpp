#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace kolmo {

// Exact rational scalar. GMP keeps it canonical: gcd(|num|, den) = 1, den >= 1.
using Rational = mpq_class;
using Integer = mpz_class;

// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);

// Accepts an optionally signed integer or fraction ("-3", "7/2", " 1/3 ").
// Throws SyntaxError or ZeroDenominator.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);

}  // namespace kolmo
