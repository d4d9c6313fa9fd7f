#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kee {

// Arbitrary-precision rational. gmpxx keeps results of arithmetic in
// canonical (reduced, positive denominator) form.
using Rat = mpq_class;

// Parses "p/q" or an integer "p". With allow_decimal, a plain decimal such as
// "0.125" is also accepted and converted exactly. Exponent notation is always
// rejected. Throws std::invalid_argument.
Rat parse_rat(std::string_view text, bool allow_decimal = false);

// Always "p/q", including integers ("1/1", "-3/1", "0/1").
std::string to_string(const Rat& value);

// Decimal rendering for human consumption only; lossy.
std::string to_decimal(const Rat& value, int significant_digits = 12);

inline int sign(const Rat& value) { return sgn(value); }

// Exact square root if value is the square of a rational.
std::optional<Rat> exact_sqrt(const Rat& value);

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace kee
