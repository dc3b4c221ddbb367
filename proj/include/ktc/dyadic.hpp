#pragma once

#include "ktc/integers.hpp"

#include <string>

namespace ktc {

/// Exact value from {0} union {2^-r : r >= 0}; the range of the symbolic
/// metric. Ordered: zero below every power, and larger r means smaller value.
class Dyadic {
public:
    Dyadic() = default;  // zero

    static Dyadic zero() { return Dyadic(); }
    static Dyadic one() { return pow2_neg(0); }
    static Dyadic pow2_neg(Int r);

    bool is_zero() const { return zero_; }
    /// The exponent r with value 2^-r. Only for nonzero values.
    const Int& neg_exponent() const;

    Rational to_rational() const;
    double to_double() const;
    std::string to_string() const;

    bool operator==(const Dyadic& o) const;
    bool operator!=(const Dyadic& o) const { return !(*this == o); }
    bool operator<(const Dyadic& o) const;
    bool operator<=(const Dyadic& o) const { return *this < o || *this == o; }
    bool operator>(const Dyadic& o) const { return o < *this; }
    bool operator>=(const Dyadic& o) const { return o <= *this; }

private:
    bool zero_ = true;
    Int r_ = 0;
};

Dyadic max(const Dyadic& a, const Dyadic& b);

}  // namespace ktc
