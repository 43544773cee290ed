#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace feitlab {

using Int = std::int64_t;
using Rational = mpq_class;

// Canonical text form: "n" for integers, "n/d" otherwise.
std::string to_string(const Rational& q);

// Accepts "n" or "n/d" (d != 0); the result is canonicalized.
Rational parse_rational(std::string_view text);

// n/d in lowest terms; d != 0.
Rational ratio(Int n, Int d);

bool is_integer(const Rational& q);

// Throws std::domain_error if q is not an integer or does not fit in 64 bits.
Int to_int(const Rational& q);

}  // namespace feitlab
