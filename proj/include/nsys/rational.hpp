#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace nsys {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) as long as they are built through arithmetic or
// through parse_rat below.
using Rat = mpq_class;

// Parses "p", "p/q", or "-p/q" (base 10). Rejects empty input, whitespace,
// zero denominators, and anything else mpq_set_str would misread.
std::optional<Rat> try_parse_rat(const std::string& text);

// Throwing variant of try_parse_rat for inputs that are supposed to be valid.
Rat parse_rat(const std::string& text);

// Canonical form used everywhere rationals are serialized: "p/q" in lowest
// terms, plain "p" when the denominator is 1.
std::string rat_str(const Rat& x);

// Decimal rendering with the given number of significant digits, for the
// "approximate" columns of CSV output. Not round-trippable on purpose.
std::string rat_decimal(const Rat& x, int significant_digits);

double rat_double(const Rat& x);

Rat rat_abs(const Rat& x);

// Canonical fraction from raw numerator and denominator. The two-argument
// mpq_class constructor skips canonicalization, which breaks comparisons, so
// integer ratios must go through here.
Rat frac(long num, long den);

// Convenience for comma-separated lists of rationals ("1/6,1/3,1/2").
std::optional<std::vector<Rat>> try_parse_rat_list(const std::string& text);

}  // namespace nsys
