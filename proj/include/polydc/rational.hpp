#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace polydc {

// Exact scalar used throughout. GMP keeps values canonical:
// positive denominator, coprime numerator and denominator.
using Rational = mpq_class;

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

// Value of a polyhedral function: finite or +infinity (nullopt).
// -infinity cannot occur; improper functions are rejected at construction.
using ExtValue = std::optional<Rational>;

Rational rat(long num, long den = 1);

// Accepts "p", "p/q" and finite decimal strings such as "-2.125".
Rational parse_rational(const std::string& text);

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& q);

std::string format_ext(const ExtValue& v);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace polydc
