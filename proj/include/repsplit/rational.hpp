#ifndef REPSPLIT_RATIONAL_HPP
#define REPSPLIT_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "repsplit/errors.hpp"

namespace repsplit {

// Exact arbitrary-precision arithmetic, backed by GMP. Values are kept
// canonical (denominator > 0, gcd(num, den) = 1) by mpq_class itself.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw DivisionByZero("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rational_div(const Rational& a, const Rational& b) {
    if (b == 0)
        throw DivisionByZero("division by zero");
    return a / b;
}

// Parses "p", "p/q" or a plain decimal like "-1.25" into an exact rational.
Rational parse_rational(const std::string& text);

// Canonical "p" / "p/q" form.
std::string rational_str(const Rational& q);

// Decimal string with the given number of fractional digits, rounded away
// from zero so that |printed| >= |q| when used as a radius bound.
std::string decimal_str_outward(const Rational& q, int digits);

// Decimal string with the given number of fractional digits (round to nearest).
std::string decimal_str(const Rational& q, int digits);

// 10^-digits as a rational.
Rational pow10_inv(int digits);

// Floor of log2 of |q| for q != 0 (coarse, used for precision heuristics).
long approx_log2(const Rational& q);

std::size_t hash_rational(const Rational& q);

} // namespace repsplit

#endif
