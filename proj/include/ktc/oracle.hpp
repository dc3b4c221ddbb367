#pragma once

#include "ktc/profile.hpp"
#include "ktc/verdict.hpp"

#include <optional>

namespace ktc {

/// Classification produced purely by exhaustive enumeration. Shares only the
/// action interface with the structured analyzers.
struct OracleResult {
    Outcome proximal = Outcome::unknown;
    Outcome asymptotic = Outcome::unknown;
    Outcome li_yorke = Outcome::unknown;
    std::optional<Rational> liminf, limsup;
    int bound = 0;  // largest per-axis period enumerated
};

/// Exact classification for systems generated by commuting permutations:
/// enumerates the orbit-distance profile over one full period box inside the
/// cone. The profile is periodic, so min/max over the box are the cone-tail
/// liminf/limsup.
OracleResult brute_pair_classify_finite(const System& sys, const Point& x, const Point& y,
                                        const ConeIndex& k);

/// Direct serial loop over cone_shell(k, window); no structural shortcuts.
std::vector<ProfileEntry> brute_profile(const System& sys, const Point& x, const Point& y,
                                        const ConeIndex& k, int window);

/// Plain box scan for the first m >^k 0 with r(m) = 1 under the canonical
/// shell-then-lex order.
std::optional<LatticeVector> brute_cone_unit(const LinearForm& h, const ConeIndex& k, int bound);

}  // namespace ktc
