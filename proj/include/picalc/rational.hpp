#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace picalc {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p" or "p/q" form.
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

inline bool is_zero(const RationalVector& v) {
    for (const auto& x : v)
        if (sgn(x) != 0) return false;
    return true;
}

/// True when q is an integer that fits in int64.
bool fits_int64(const Rational& q);

}  // namespace picalc
