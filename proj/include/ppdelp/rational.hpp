#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ppdelp {

using Rational = mpq_class;

/// Parses "0.8", "1", "3/4" exactly. Throws ValidationError on malformed text.
Rational parseRational(std::string_view text);

/// "3/4", or "2" when the denominator is 1.
std::string toFractionString(const Rational& value);

/// Rounded to a fixed number of decimal places ("0.850000").
std::string toDecimalString(const Rational& value, int places = 6);

/// Exact decimal text when the expansion terminates ("0.85"), otherwise the fraction.
std::string toExactString(const Rational& value);

} // namespace ppdelp
