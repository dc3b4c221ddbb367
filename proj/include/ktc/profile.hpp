#pragma once

#include "ktc/system.hpp"

#include <vector>

namespace ktc {

struct ProfileEntry {
    LatticeVector n;
    Dist value;
};

/// d(act(n,x), act(n,y)) for every n in cone_shell(k, window), in canonical
/// shell order. Evaluation is parallel; the result is order-deterministic.
std::vector<ProfileEntry> distance_profile(const System& sys, const Point& x, const Point& y,
                                           const ConeIndex& k, int window);

/// Same over the full box [-window, window]^d (zero included), for the
/// quantifiers that range over all of Z^d.
std::vector<ProfileEntry> box_profile(const System& sys, const Point& x, const Point& y,
                                      int window);

}  // namespace ktc
