#include "ktc/integers.hpp"

#include <sstream>

namespace ktc {

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        return make_rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("parse_rational: malformed rational '" + text + "'");
    }
}

std::string rational_to_string(const Rational& value) {
    std::ostringstream os;
    os << numerator(value);
    if (denominator(value) != 1) os << '/' << denominator(value);
    return os.str();
}

}  // namespace ktc
