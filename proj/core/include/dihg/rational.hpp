#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace dihg {

// Exact rational scalar. All geometry, predicates and certificates in this
// library are computed over Rat; doubles appear only inside the numeric
// balanced-point search.
using Rat = mpq_class;

// num/den reduced to lowest terms with positive denominator. den must be nonzero.
Rat make_rat(long num, long den = 1);

// Accepts "p/q" or a bare integer "p" (optional leading '-'). Throws
// std::invalid_argument on malformed input or zero denominator.
Rat parse_rat(std::string_view text);

// Canonical serialization, always "p/q" (e.g. "3/1", "-1/2").
std::string rat_str(const Rat& r);

double rat_double(const Rat& r);

// Best rational approximation to v with denominator <= max_den (continued
// fractions / Stern-Brocot). Returns nothing for non-finite v.
std::optional<Rat> rationalize(double v, unsigned long max_den);

long rat_floor(const Rat& r);
long rat_ceil(const Rat& r);

}  // namespace dihg
