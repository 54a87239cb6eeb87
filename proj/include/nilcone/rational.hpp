#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nilcone {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical "p/q" text with q > 0 and gcd(p, q) = 1; integers keep the "/1".
std::string to_string(const Rational& x);

/// Accepts "p", "p/q" and leading '+'/'-'. Throws InputError on malformed
/// text or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace nilcone
