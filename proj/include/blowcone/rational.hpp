#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace blowcone {

using Rational = mpq_class;

/// Parses "p" or "p/q" (q > 0, optional leading '-') into a canonical
/// rational. Anything else throws ParseError.
Rational parse_rational(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" in lowest terms otherwise.
std::string to_string(const Rational& value);

bool is_integer(const Rational& value);

}  // namespace blowcone
