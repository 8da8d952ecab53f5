#pragma once

#include <gmpxx.h>

#include <string>

#include "verlinde/error.hpp"

namespace verlinde {

/// Exact rational number, always kept in lowest terms with positive denominator.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0)
        throw DivisionByZero("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/// "p" or "p/q".
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p" or "p/q" (optional leading '-').
Rational parse_rational(const std::string& text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

BigInt factorial(unsigned n);

} // namespace verlinde
