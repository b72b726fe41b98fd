#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace quaddyn {

using Integer = mpz_class;
using Rational = mpq_class;

// Accepts "p", "p/q", "-p/q" with optional surrounding blanks.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
std::string to_string(const Integer& n);

// max(|num|, den) in lowest terms.
Integer height(const Rational& r);

Integer isqrt(const Integer& n);  // floor, n >= 0
Integer isqrt_ceil(const Integer& n);
bool is_square(const Integer& n);
// Exact square root in Q if r is a square.
std::optional<Rational> rational_sqrt(const Rational& r);

Rational pow(const Rational& r, long e);
Integer pow(const Integer& n, unsigned long e);

}  // namespace quaddyn
