#include "ktc/profile.hpp"

namespace ktc {

namespace {

std::vector<ProfileEntry> evaluate_at(const System& sys, const Point& x, const Point& y,
                                      std::vector<LatticeVector> points) {
    std::vector<ProfileEntry> out(points.size());
    const auto count = static_cast<std::int64_t>(points.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        const LatticeVector& n = points[idx];
        out[idx] = ProfileEntry{n, sys.dist(sys.act(n, x), sys.act(n, y))};
    }
    return out;
}

}  // namespace

std::vector<ProfileEntry> distance_profile(const System& sys, const Point& x, const Point& y,
                                           const ConeIndex& k, int window) {
    return evaluate_at(sys, x, y, cone_shell(k, window));
}

std::vector<ProfileEntry> box_profile(const System& sys, const Point& x, const Point& y,
                                      int window) {
    return evaluate_at(sys, x, y, full_box(sys.dimension(), window));
}

}  // namespace ktc
