#pragma once

/*
 * rational.hpp
 * ------------
 * Exact rational arithmetic for the coefficient field.  Backed by GMP's
 * mpq_class; all values are kept canonical (lowest terms, positive
 * denominator, zero is 0/1).
 */

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace ps {

using Rational = mpq_class;
using Integer = mpz_class;

// mpq_class construction from num/den does not canonicalize; this does.
Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(long num, long den = 1);

// Parses "p", "-p" or "p/q" (q > 0 after normalization). Throws
// std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(const std::string& text);

// Renders canonical "p" or "p/q".
std::string render_rational(const Rational& r);

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_one(const Rational& r) { return r == 1; }
inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// r^e for integer e (e < 0 requires r != 0).
Rational rational_pow(const Rational& r, long e);

// Exact square root when r is a square of a rational, nullopt otherwise.
std::optional<Rational> rational_sqrt(const Rational& r);

}  // namespace ps
