#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace menv {

/// Exact rational number in lowest terms with positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "n" or "n/d" (optional leading '-'). Throws std::invalid_argument
/// on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

}  // namespace menv
