// Arbitrary-precision rational numbers, backed by GMP.
//
// mpq_class already maintains the canonical form we need (gcd-reduced,
// positive denominator), so this header only adds parsing, printing and
// a few helpers the rest of the library uses.
#pragma once

#include <gmpxx.h>

#include <string>

#include "wbr/errors.hpp"

namespace wbr {

using Int = mpz_class;
using Rat = mpq_class;

inline bool rat_is_integer(const Rat& a) { return a.get_den() == 1; }

inline bool rat_is_zero(const Rat& a) { return sgn(a) == 0; }

/// |a| as a rational.
inline Rat rat_abs(const Rat& a) { return sgn(a) < 0 ? Rat(-a) : a; }

/// a^e for e >= 0.
Rat rat_pow(const Rat& a, unsigned long e);

/// Parses "p", "-p" or "p/q" (q > 0 after normalization). Throws Error on
/// malformed input or zero denominator.
Rat rat_parse(const std::string& text);

/// Canonical string: "p" when the denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rat& a);

} // namespace wbr
