#include "ktc/point.hpp"

#include <sstream>

namespace ktc {

Point Point::finite(int index) { return Point(Storage(index)); }

Point Point::config(SymbolicConfig c) { return Point(Storage(std::move(c))); }

Point Point::circle(CirclePoint c) { return Point(Storage(c)); }

Point Point::product(Point first, Point second) {
    Prod p{std::make_shared<const Point>(std::move(first)),
           std::make_shared<const Point>(std::move(second))};
    return Point(Storage(std::move(p)));
}

bool Point::is_finite() const { return std::holds_alternative<int>(v_); }
bool Point::is_config() const { return std::holds_alternative<SymbolicConfig>(v_); }
bool Point::is_circle() const { return std::holds_alternative<CirclePoint>(v_); }
bool Point::is_product() const { return std::holds_alternative<Prod>(v_); }

int Point::as_finite() const { return std::get<int>(v_); }
const SymbolicConfig& Point::as_config() const { return std::get<SymbolicConfig>(v_); }
const CirclePoint& Point::as_circle() const { return std::get<CirclePoint>(v_); }
const Point& Point::first() const { return *std::get<Prod>(v_).first; }
const Point& Point::second() const { return *std::get<Prod>(v_).second; }

std::string Point::to_string() const {
    if (is_finite()) return "#" + std::to_string(as_finite());
    if (is_config()) return as_config().to_string();
    if (is_circle()) {
        std::ostringstream os;
        os.precision(12);
        os << "angle " << as_circle().angle;
        return os.str();
    }
    return "(" + first().to_string() + ", " + second().to_string() + ")";
}

bool point_equal(const Point& a, const Point& b) {
    if (a.is_finite() && b.is_finite()) return a.as_finite() == b.as_finite();
    if (a.is_config() && b.is_config()) return a.as_config() == b.as_config();
    if (a.is_circle() && b.is_circle())
        return circle_distance(a.as_circle(), b.as_circle()) <= kIdentityTol;
    if (a.is_product() && b.is_product())
        return point_equal(a.first(), b.first()) && point_equal(a.second(), b.second());
    return false;
}

}  // namespace ktc
