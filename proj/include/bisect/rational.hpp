// Exact rational arithmetic for bound bookkeeping.
#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace bisect {

using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

inline std::int64_t floor_of(const Rational& r) {
    std::int64_t q = r.numerator() / r.denominator();
    if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
    return q;
}

inline std::int64_t ceil_of(const Rational& r) { return -floor_of(-r); }

inline std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

/// Parses "p/q", an integer, or a finite decimal such as "0.05".
Rational parse_rational(const std::string& text);

}  // namespace bisect
