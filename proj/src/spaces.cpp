#include "ktc/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ktc {

Dist Dist::from_rational(Rational v) {
    Dist d;
    d.approx = static_cast<double>(v);
    d.exact = std::move(v);
    return d;
}

Dist Dist::from_dyadic(const Dyadic& v) { return from_rational(v.to_rational()); }

Dist Dist::from_double(double v) {
    Dist d;
    d.approx = v;
    return d;
}

bool Dist::leq(const Rational& threshold) const {
    if (exact) return *exact <= threshold;
    return approx <= static_cast<double>(threshold) + kVerdictTol;
}

bool Dist::greater(const Rational& threshold) const {
    if (exact) return *exact > threshold;
    return approx > static_cast<double>(threshold) + kVerdictTol;
}

bool Dist::is_zero() const {
    if (exact) return *exact == 0;
    return std::abs(approx) <= kVerdictTol;
}

std::string Dist::to_string() const {
    if (exact) return rational_to_string(*exact);
    std::ostringstream os;
    os.precision(17);
    os << approx;
    return os.str();
}

Dist sup_combine(const Dist& a, const Dist& b) {
    if (a.exact && b.exact) return Dist::from_rational(std::max(*a.exact, *b.exact));
    Dist d;
    d.approx = std::max(a.approx, b.approx);
    return d;
}

bool dist_equal(const Dist& a, const Dist& b) {
    if (a.exact && b.exact) return *a.exact == *b.exact;
    return std::abs(a.approx - b.approx) <= kVerdictTol;
}

FiniteSpace::FiniteSpace(int size, std::vector<Rational> metric_table)
    : size_(size), table_(std::move(metric_table)) {
    if (size_ < 1) throw std::invalid_argument("FiniteSpace: size must be positive");
    if (table_.size() != static_cast<std::size_t>(size_) * static_cast<std::size_t>(size_)) {
        throw std::invalid_argument("FiniteSpace: metric table size mismatch");
    }
    min_positive_ = 0;
    for (int a = 0; a < size_; ++a) {
        for (int b = 0; b < size_; ++b) {
            const Rational& d = metric(a, b);
            if (d != metric(b, a)) throw std::invalid_argument("FiniteSpace: metric not symmetric");
            if (a == b) {
                if (d != 0) throw std::invalid_argument("FiniteSpace: nonzero self-distance");
            } else {
                if (d <= 0) {
                    throw std::invalid_argument("FiniteSpace: distinct points need positive distance");
                }
                if (min_positive_ == 0 || d < min_positive_) min_positive_ = d;
            }
            for (int c = 0; c < size_; ++c) {
                if (metric(a, c) > d + metric(b, c)) {
                    throw std::invalid_argument("FiniteSpace: triangle inequality violated");
                }
            }
        }
    }
}

const Rational& FiniteSpace::metric(int a, int b) const {
    if (a < 0 || b < 0 || a >= size_ || b >= size_) {
        throw std::invalid_argument("FiniteSpace: point index out of range");
    }
    return table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(size_) +
                  static_cast<std::size_t>(b)];
}

CirclePoint CirclePoint::wrap(double raw) {
    double a = std::fmod(raw, 1.0);
    if (a < 0) a += 1.0;
    if (a >= 1.0) a = 0.0;
    return CirclePoint{a};
}

double circle_distance(const CirclePoint& a, const CirclePoint& b) {
    const double diff = std::abs(a.angle - b.angle);
    return std::min(diff, 1.0 - diff);
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = size();
    if (n == 0) throw std::invalid_argument("Permutation: empty image list");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : images_) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("Permutation: images must be a bijection");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
    // order = lcm of cycle lengths
    std::vector<bool> visited(static_cast<std::size_t>(n), false);
    for (int s = 0; s < n; ++s) {
        if (visited[static_cast<std::size_t>(s)]) continue;
        long long len = 0;
        int x = s;
        do {
            visited[static_cast<std::size_t>(x)] = true;
            x = apply(x);
            ++len;
        } while (x != s);
        order_ = std::lcm(order_, len);
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i;
    return Permutation(std::move(img));
}

Permutation Permutation::compose(const Permutation& then) const {
    if (size() != then.size()) throw std::invalid_argument("Permutation: size mismatch");
    std::vector<int> img(images_.size());
    for (int i = 0; i < size(); ++i) {
        img[static_cast<std::size_t>(i)] = then.apply(apply(i));
    }
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(images_.size());
    for (int i = 0; i < size(); ++i) {
        img[static_cast<std::size_t>(apply(i))] = i;
    }
    return Permutation(std::move(img));
}

int Permutation::power_apply(const Int& exponent, int x) const {
    Int e = exponent % order_;
    if (e < 0) e += order_;
    long long steps = static_cast<long long>(e);
    for (long long i = 0; i < steps; ++i) x = apply(x);
    return x;
}

bool Permutation::commutes_with(const Permutation& o) const {
    return compose(o) == o.compose(*this);
}

}  // namespace ktc
