#pragma once

#include "ktc/spaces.hpp"
#include "ktc/symbolic.hpp"

#include <memory>
#include <string>
#include <variant>

namespace ktc {

/// Phase-space point: a finite-space index, a shift configuration, a circle
/// angle, or a pair of points. Immutable.
class Point {
public:
    static Point finite(int index);
    static Point config(SymbolicConfig c);
    static Point circle(CirclePoint c);
    static Point product(Point first, Point second);

    bool is_finite() const;
    bool is_config() const;
    bool is_circle() const;
    bool is_product() const;

    int as_finite() const;
    const SymbolicConfig& as_config() const;
    const CirclePoint& as_circle() const;
    const Point& first() const;
    const Point& second() const;

    std::string to_string() const;

private:
    struct Prod {
        std::shared_ptr<const Point> first, second;
    };
    using Storage = std::variant<int, SymbolicConfig, CirclePoint, Prod>;

    Storage v_;

    explicit Point(Storage v) : v_(std::move(v)) {}
};

/// Structural equality; circle angles compare within kIdentityTol.
bool point_equal(const Point& a, const Point& b);

}  // namespace ktc
