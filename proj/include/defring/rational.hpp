#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace defring {

// Canonical (reduced, positive denominator) rationals come for free with mpq.
using Rational = mpq_class;

Rational rational(long num, long den = 1);

// "num/den" always, e.g. "3/1", "-2/5".
std::string to_fraction(const Rational& q);

// Short form for humans: "3", "-2/5".
std::string to_display(const Rational& q);

// Accepts "7", "-3/4", " 12 ".
Rational parse_rational(std::string_view text);

// Residue of q modulo the prime m; q's denominator must be prime to m.
long residue_mod(const Rational& q, long m);

}  // namespace defring
