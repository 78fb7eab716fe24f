#pragma once

/// Exact arbitrary-precision integer and rational arithmetic.
///
/// Everything in this library computes over GMP's mpz/mpq value types;
/// there is no floating point anywhere in the kernel. Rationals are kept
/// canonical (gcd(|num|, den) = 1, den >= 1) by GMP itself; the helpers
/// here add the few operations GMP does not ship directly (floor, exact
/// rounding, dyadic powers, text I/O in the "p/q" wire format).

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace toral {

using Int = mpz_class;
using Rat = mpq_class;

/// Builds the canonical rational num/den. den must be nonzero; the sign
/// moves to the numerator and the fraction is reduced.
Rat make_rat(const Int& num, const Int& den);

/// floor(r) as an integer.
Int rat_floor(const Rat& r);

/// ceil(r) as an integer.
Int rat_ceil(const Rat& r);

/// Nearest integer to r, half-integers rounded to the even neighbor.
Int round_half_even(const Rat& r);

/// r - floor(r), the canonical representative in [0, 1).
Rat mod_one(const Rat& r);

/// 2^-n as an exact rational (n >= 0).
Rat pow2_inverse(unsigned n);

Rat abs(const Rat& r);
Int abs(const Int& n);

/// Three-way comparison of |a| and |b|: negative, zero, or positive.
int cmpabs(const Int& a, const Int& b);

/// Wire format: always "p/q", canonical, "0/1" for zero.
std::string rat_to_string(const Rat& r);

/// Parses "p/q" or a bare integer "p". Returns nullopt on malformed input
/// (including a zero denominator).
std::optional<Rat> rat_from_string(const std::string& text);

/// Least common multiple of the denominators of a list of rationals
/// (1 for an empty list).
Int common_denominator(const std::vector<Rat>& values);

}  // namespace toral
