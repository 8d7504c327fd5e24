#pragma once

#include <gmpxx.h>

#include <string>

namespace imcert {

// Exact arbitrary-precision rational. All feasibility and optimality
// decisions in this project are exact comparisons on these.
using Rat = mpq_class;

// p/q with canonicalization (q may be negative or share factors with p).
Rat rational(long p, long q = 1);

// Parses "p/q" or "p" (base 10, optional sign). Throws InputError on
// malformed input or zero denominator.
Rat rat_parse(const std::string& s);

// Canonical "p/q" form, denominator always printed ("3" -> "3/1").
std::string rat_str(const Rat& q);

double rat_approx(const Rat& q);

}  // namespace imcert
