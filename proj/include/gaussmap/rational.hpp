#pragma once

#include <gmpxx.h>

#include <string>

namespace gaussmap {

/// Exact big rational. GMP keeps values canonical (reduced, positive
/// denominator); everything built on top stays rounding-free.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// Parses "p/q", a plain integer, or a finite decimal ("2.25" -> 9/4).
/// Throws std::invalid_argument on anything else, including q = 0.
Rat parse_rational(const std::string& text);

std::string rat_string(const Rat& r);

double rat_double(const Rat& r);

}  // namespace gaussmap
