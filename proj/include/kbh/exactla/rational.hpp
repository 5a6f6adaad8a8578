#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace kbh {

/// Exact rationals. mpq_class keeps values canonical (reduced, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "a", "-a" or "a/b" (b != 0). Throws ParseError otherwise.
Rational parse_rational(std::string_view text);

/// Canonical text form: "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& value);

}  // namespace kbh
