#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace leibcoh {

// Exact rational scalar. cpp_rational keeps lowest terms and a positive
// denominator by construction, which is exactly the invariant we need;
// no arithmetic in this project ever rounds.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// Accepts "p" or "p/q" with integer p, positive integer q (an optional
// leading '-' on p only). Anything else, in particular decimal strings
// like "0.5", throws ParseError.
Rat parse_rational(const std::string& text);

// Inverse of parse_rational: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& r);

} // namespace leibcoh
