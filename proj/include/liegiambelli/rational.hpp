#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace liegiambelli {

using Integer = mpz_class;
using Rational = mpq_class;

// "p/q" or a bare integer, always in lowest terms.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

// Accepts "p/q", "-p/q" or an integer literal.
Rational parse_rational(std::string_view text);

bool is_integral(const Rational& q);

// Throws TooLarge when the value does not fit.
std::int64_t to_int64(const Integer& z);

Integer factorial(unsigned k);
Integer binomial(std::int64_t n, std::int64_t k);

}  // namespace liegiambelli
