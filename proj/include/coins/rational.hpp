#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace coins {

// All probabilities, face values and odds are exact rationals.
using Rat = mpq_class;

// Canonicalized rational from an integer pair.
inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses an integer literal or `p/q` with q > 0.  Throws ParseError.
Rat parse_rational(std::string_view text);

// Canonical lowest terms; integers are printed without the `/1`.
std::string format_rational(const Rat& q);

}  // namespace coins
