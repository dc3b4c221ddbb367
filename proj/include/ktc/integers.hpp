#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ktc {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::int64_t to_int64(const Int& v, const char* what = "integer") {
    if (v > Int(INT64_MAX) || v < Int(INT64_MIN)) {
        throw std::overflow_error(std::string(what) + ": value out of int64 range");
    }
    return static_cast<std::int64_t>(v);
}

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

inline Int gcd_int(Int a, Int b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    return Rational(num) / Rational(den);
}

/// Parses "p/q" or "p" into an exact rational.
Rational parse_rational(const std::string& text);

std::string rational_to_string(const Rational& value);

}  // namespace ktc
