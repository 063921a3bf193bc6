#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace arrlocal {

using Integer = mpz_class;

// mpq_class keeps values canonical (reduced, positive denominator) as long as
// they are built through arithmetic or parse_rational.
using Rational = mpq_class;

// Accepts `p`, `p/q`, `-p/q`. No whitespace, q != 0. Throws ParseError.
Rational parse_rational(std::string_view token);

// Prints `p` when the denominator is 1, otherwise `p/q`.
std::string to_string(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

// floor for rationals (mpz_fdiv_q on num/den).
Integer floor(const Rational& value);

} // namespace arrlocal
