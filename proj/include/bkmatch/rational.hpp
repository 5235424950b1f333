#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace bkmatch {

// Exact rational arithmetic. Every probability, weight and verdict in this
// library is an mpq value; there is no floating point on any verified path.
using Rat = mpq_class;

// Parses "p" or "p/q" (decimal, optional leading '-').
// Throws std::invalid_argument("invalid rational") on anything else,
// including a zero denominator.
Rat parse_rational(std::string_view text);

// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rat& r);

}  // namespace bkmatch
