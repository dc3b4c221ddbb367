#pragma once

#include "ktc/symbolic.hpp"
#include "ktc/verdict.hpp"

namespace ktc {

/// Classical (Z-action, forward tail n -> +infinity) classification of a pair
/// of one-dimensional configurations under the shift. Implemented directly
/// from the definitions by tail inspection, independently of the
/// difference-set calculus, so it can serve as a reference path.
struct ClassicalPairClass {
    Outcome proximal = Outcome::unknown;
    Outcome asymptotic = Outcome::unknown;
    Outcome li_yorke = Outcome::unknown;
    std::optional<Rational> liminf, limsup;
};

/// Exact classical classification. Throws std::domain_error for pair
/// structures outside the supported shapes (two block families, or a block
/// over a disagreeing background).
ClassicalPairClass classical_classify(const SymbolicConfig& x, const SymbolicConfig& y);

/// Constructive classical facts about the 1-D full shift, used as theorem
/// hypotheses: sensitivity with delta = 1/2, cylinder transitivity, Li-Yorke
/// sensitivity with eps = 1/2.
Verdict classical_shift_sensitivity();
Verdict classical_shift_transitivity();
Verdict classical_shift_li_yorke_sensitivity();

}  // namespace ktc
