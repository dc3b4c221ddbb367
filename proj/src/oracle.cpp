#include "ktc/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace ktc {

namespace {

constexpr int kMaxAxisPeriod = 4096;

LatticeVector axis_vector(int dim, int axis, long long value) {
    std::vector<Int> coords(static_cast<std::size_t>(dim), Int(0));
    coords[static_cast<std::size_t>(axis)] = Int(value);
    return LatticeVector{std::move(coords)};
}

// Smallest p >= 1 with act(p * e_axis, x) = x and likewise for y. Uses only
// the action interface; existence is guaranteed for finite systems.
long long pair_axis_period(const System& sys, const Point& x, const Point& y, int axis) {
    Point px = x;
    Point py = y;
    const LatticeVector step = axis_vector(sys.dimension(), axis, 1);
    for (long long p = 1; p <= kMaxAxisPeriod; ++p) {
        px = sys.act(step, px);
        py = sys.act(step, py);
        if (point_equal(px, x) && point_equal(py, y)) return p;
    }
    throw std::invalid_argument("no axis period found; system is not finite-order");
}

}  // namespace

OracleResult brute_pair_classify_finite(const System& sys, const Point& x, const Point& y,
                                        const ConeIndex& k) {
    if (k.dim != sys.dimension()) throw std::invalid_argument("cone dimension mismatch");
    const int d = sys.dimension();

    std::vector<long long> periods(d);
    long long box = 1;
    for (int i = 0; i < d; ++i) {
        periods[i] = pair_axis_period(sys, x, y, i);
        box *= periods[i];
        if (box > (1LL << 22)) throw std::invalid_argument("period box too large to enumerate");
    }

    OracleResult res;
    for (long long p : periods) res.bound = static_cast<int>(std::max<long long>(res.bound, p));

    bool have = false;
    bool all_exact = true;
    Rational mn_r, mx_r;
    double mn_a = 0.0, mx_a = 0.0;
    std::vector<long long> t(d, 1);
    while (true) {
        std::vector<Int> coords(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) coords[static_cast<std::size_t>(i)] = Int(k.sign(i) * t[i]);
        const LatticeVector n{std::move(coords)};
        const Dist dist = sys.dist(sys.act(n, x), sys.act(n, y));
        if (!dist.exact) all_exact = false;
        if (!have) {
            have = true;
            mn_a = mx_a = dist.approx;
            if (dist.exact) mn_r = mx_r = *dist.exact;
        } else {
            mn_a = std::min(mn_a, dist.approx);
            mx_a = std::max(mx_a, dist.approx);
            if (all_exact) {
                mn_r = std::min(mn_r, *dist.exact);
                mx_r = std::max(mx_r, *dist.exact);
            }
        }
        int axis = 0;
        while (axis < d && t[axis] == periods[axis]) {
            t[axis] = 1;
            ++axis;
        }
        if (axis == d) break;
        ++t[axis];
    }

    const bool min_zero = all_exact ? (mn_r == 0) : (mn_a <= kVerdictTol);
    const bool max_zero = all_exact ? (mx_r == 0) : (mx_a <= kVerdictTol);
    res.proximal = min_zero ? Outcome::yes : Outcome::no;
    res.asymptotic = max_zero ? Outcome::yes : Outcome::no;
    res.li_yorke = (res.proximal == Outcome::yes && res.asymptotic == Outcome::no)
                       ? Outcome::yes
                       : Outcome::no;
    if (all_exact) {
        res.liminf = mn_r;
        res.limsup = mx_r;
    }
    return res;
}

std::vector<ProfileEntry> brute_profile(const System& sys, const Point& x, const Point& y,
                                        const ConeIndex& k, int window) {
    const auto shell = cone_shell(k, window);
    std::vector<ProfileEntry> out;
    out.reserve(shell.size());
    for (const auto& n : shell) {
        out.push_back(ProfileEntry{n, sys.dist(sys.act(n, x), sys.act(n, y))});
    }
    return out;
}

std::optional<LatticeVector> brute_cone_unit(const LinearForm& h, const ConeIndex& k, int bound) {
    if (h.dim() != k.dim) throw std::invalid_argument("form dimension mismatch");
    if (bound < 1) throw std::invalid_argument("bound must be positive");
    const int d = k.dim;

    std::optional<LatticeVector> best;
    auto better = [&](const LatticeVector& a, const LatticeVector& b) {
        // shell-major, then lexicographic: the canonical enumeration order.
        const Int na = a.max_norm();
        const Int nb = b.max_norm();
        if (na != nb) return na < nb;
        for (int i = 0; i < d; ++i) {
            if (a[i] != b[i]) return a[i] < b[i];
        }
        return false;
    };

    std::vector<long long> t(d, -bound);
    while (true) {
        std::vector<Int> coords(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) coords[static_cast<std::size_t>(i)] = Int(t[i]);
        const LatticeVector m{std::move(coords)};
        if (cone_greater(k, m, LatticeVector::zero(d)) && r_eval(h, m) == Int(1)) {
            if (!best || better(m, *best)) best = m;
        }
        int axis = d - 1;
        while (axis >= 0 && t[axis] == bound) {
            t[axis] = -bound;
            --axis;
        }
        if (axis < 0) break;
        ++t[axis];
    }
    return best;
}

}  // namespace ktc
