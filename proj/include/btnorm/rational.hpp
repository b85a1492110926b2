#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace btnorm {

using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;

/// Parses "a", "-a" or "a/b" (lowest terms not required). Throws Error(malformed).
Rational parse_rational(std::string_view text);

/// Canonical form: lowest terms, "a" for integers and "a/b" otherwise.
std::string to_string(const Rational& q);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);

/// q - floor(q), in [0, 1).
Rational frac(const Rational& q);

Vector parse_vector(std::string_view csv);
std::string to_string(const Vector& v);

}  // namespace btnorm
