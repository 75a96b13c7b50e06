#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace tautring {

using Integer = mpz_class;
using Rational = mpq_class;

/// Exact text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

/// Parses "p" or "p/q" (optional sign). Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// num/den in lowest terms. Throws std::domain_error for den = 0.
Rational ratio(const Integer& num, const Integer& den);

Integer factorial(int n);
Integer binomial(int n, int k);

/// Integer power with a non-negative exponent.
Rational pow(const Rational& base, int exponent);

}  // namespace tautring
