#pragma once

#include "ktc/lattice.hpp"
#include "ktc/spaces.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ktc {

enum class Outcome { yes, no, unknown };

const char* outcome_name(Outcome o);

/// Lattice points and free-form notes backing a verdict.
struct Witness {
    std::vector<LatticeVector> lattice_points;
    std::string notes;
};

/// Three-valued answer. `exact` distinguishes verdicts proved by a structural
/// rule from windowed evidence; Unknown (and windowed verdicts) carry the
/// searched bound in `window`.
struct Verdict {
    Outcome outcome = Outcome::unknown;
    std::string rule;
    bool exact = false;
    std::optional<Witness> witness;
    int window = 0;

    bool decided() const { return outcome != Outcome::unknown; }

    static Verdict yes(std::string rule, bool exact, std::optional<Witness> w = std::nullopt,
                       int window = 0);
    static Verdict no(std::string rule, bool exact, std::optional<Witness> w = std::nullopt,
                      int window = 0);
    static Verdict unknown(std::string rule, int window);
};

/// Classification of one pair under one cone order. The liminf/limsup of the
/// orbit-distance profile along the cone are exact rationals when a closed
/// form applies.
struct PairClass {
    Verdict proximal;
    Verdict asymptotic;
    Verdict li_yorke;
    std::vector<std::pair<Rational, Verdict>> asymptotic_at;  // eps-grid order
    std::optional<Rational> liminf, limsup;
};

/// Quantifier bounds for every analysis: search window, epsilon grid,
/// sensitivity threshold, sampling volume and seed.
struct AnalysisConfig {
    int window = 32;
    std::vector<Rational> eps_grid = {make_rational(1, 2), make_rational(1, 4),
                                      make_rational(1, 8), make_rational(1, 16)};
    Rational delta = make_rational(1, 2);
    int sample_count = 20;
    std::uint64_t seed = 1u;

    /// Throws std::invalid_argument on nonsensical values.
    void validate() const;
};

}  // namespace ktc
