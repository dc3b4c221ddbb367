#include "ktc/dyadic.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ktc {

Dyadic Dyadic::pow2_neg(Int r) {
    if (r < 0) throw std::invalid_argument("Dyadic: exponent must be nonnegative");
    Dyadic d;
    d.zero_ = false;
    d.r_ = std::move(r);
    return d;
}

const Int& Dyadic::neg_exponent() const {
    if (zero_) throw std::logic_error("Dyadic: zero has no exponent");
    return r_;
}

Rational Dyadic::to_rational() const {
    if (zero_) return Rational(0);
    if (r_ > 1 << 20) throw std::overflow_error("Dyadic: exponent too large for rational");
    Int den = Int(1) << static_cast<unsigned>(r_);
    return make_rational(1, den);
}

double Dyadic::to_double() const {
    if (zero_) return 0.0;
    if (r_ > 4096) return 0.0;  // below double denormal range
    return std::ldexp(1.0, -static_cast<int>(r_));
}

std::string Dyadic::to_string() const {
    if (zero_) return "0";
    std::ostringstream os;
    os << "2^-" << r_;
    return os.str();
}

bool Dyadic::operator==(const Dyadic& o) const {
    if (zero_ || o.zero_) return zero_ == o.zero_;
    return r_ == o.r_;
}

bool Dyadic::operator<(const Dyadic& o) const {
    if (zero_) return !o.zero_;
    if (o.zero_) return false;
    return r_ > o.r_;
}

Dyadic max(const Dyadic& a, const Dyadic& b) { return a < b ? b : a; }

}  // namespace ktc
