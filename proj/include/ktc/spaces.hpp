#pragma once

#include "ktc/dyadic.hpp"
#include "ktc/integers.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ktc {

/// Metric value: exact rational where the space allows, with a floating
/// approximation always on hand. Comparisons between exact values are exact;
/// anything involving an approximate value uses `kVerdictTol`.
struct Dist {
    std::optional<Rational> exact;
    double approx = 0.0;

    static Dist from_rational(Rational v);
    static Dist from_dyadic(const Dyadic& v);
    static Dist from_double(double v);

    bool is_exact() const { return exact.has_value(); }

    bool leq(const Rational& threshold) const;
    bool greater(const Rational& threshold) const;
    bool is_zero() const;

    std::string to_string() const;
};

/// Tolerance for verdicts involving floating distances.
inline constexpr double kVerdictTol = 1e-9;
/// Tolerance for isometry/bijection identity checks on sampled points.
inline constexpr double kIdentityTol = 1e-12;

Dist sup_combine(const Dist& a, const Dist& b);
bool dist_equal(const Dist& a, const Dist& b);

/// Finite metric space on points {0, ..., size-1} with exact rational
/// distances. The constructor verifies all three metric axioms.
class FiniteSpace {
public:
    FiniteSpace(int size, std::vector<Rational> metric_table);

    int size() const { return size_; }
    const Rational& metric(int a, int b) const;
    /// Smallest nonzero distance; separation radius for exhaustive arguments.
    const Rational& min_positive() const { return min_positive_; }

private:
    int size_;
    std::vector<Rational> table_;
    Rational min_positive_;
};

/// Point of the unit circle R/Z, stored as an angle in [0, 1).
struct CirclePoint {
    double angle = 0.0;

    static CirclePoint wrap(double raw);
};

double circle_distance(const CirclePoint& a, const CirclePoint& b);

/// Permutation of {0, ..., n-1}; generator of a finite invertible dynamic.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(images_.size()); }
    int apply(int x) const { return images_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& images() const { return images_; }

    Permutation compose(const Permutation& then) const;  // x -> then(this(x))
    Permutation inverse() const;
    /// Iterated application with an arbitrary integer exponent.
    int power_apply(const Int& exponent, int x) const;
    long long order() const { return order_; }

    bool commutes_with(const Permutation& o) const;
    bool operator==(const Permutation& o) const { return images_ == o.images_; }

private:
    std::vector<int> images_;
    long long order_ = 1;
};

}  // namespace ktc
