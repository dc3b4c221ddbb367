#pragma once

#include "ktc/profile.hpp"
#include "ktc/verdict.hpp"

#include <vector>

namespace ktc {

/// Classifies the pair (x, y) along the cone order k: proximality,
/// asymptoticity (overall and at each epsilon of the grid), Li-Yorke status,
/// and the exact profile liminf/limsup when a closed form applies. Structural
/// rules are tried first; otherwise windowed evidence with the asymmetric
/// semantics: windows can confirm proximality witnesses and refute
/// asymptoticity, never the reverse.
PairClass classify_pair(const System& sys, const Point& x, const Point& y, const ConeIndex& k,
                        const AnalysisConfig& cfg);

/// All pairs from `points` Li-Yorke under k. No on the first failing pair;
/// Unknown if no pair fails but some is undecided.
Verdict scrambled_set_check(const System& sys, const std::vector<Point>& points,
                            const ConeIndex& k, const AnalysisConfig& cfg);

/// Sensitive dependence along the cone: some delta > 0 separates a point from
/// arbitrarily close companions at some n >_k 0.
Verdict sensitivity_check(const System& sys, const ConeIndex& k, const AnalysisConfig& cfg);

/// Equicontinuity at x, quantified over the full lattice (no cone): for every
/// eps some delta keeps all companions of x eps-close under every act(n, .).
Verdict equicontinuity_point_check(const System& sys, const Point& x, const AnalysisConfig& cfg);

/// Membership of x in G_l: some delta-ball around x stays within diameter 1/l
/// under every act(n, .). Yes verdicts note negative invariance.
Verdict gl_membership(const System& sys, const Point& x, int l, const AnalysisConfig& cfg);

/// Cone limit set of x for a finite-order system: points hit at arbitrarily
/// large cone depth. Exact; throws std::invalid_argument otherwise.
std::vector<Point> limit_set_finite(const System& sys, const Point& x, const ConeIndex& k);

/// Cone prolongation set: limits of act(n, x') over x' -> x and deep cone n.
/// Computed independently of limit_set_finite and cross-checked against it.
std::vector<Point> prolongation_set_finite(const System& sys, const Point& x, const ConeIndex& k);

/// Topological transitivity along the cone: cylinder/orbit arguments where the
/// structure gives them, windowed orbit-density evidence otherwise.
Verdict transitivity_check(const System& sys, const ConeIndex& k, const AnalysisConfig& cfg);

/// Li-Yorke sensitivity: a single eps > 0 such that every point has, in every
/// neighborhood, a companion forming a Li-Yorke pair with oscillation >= eps.
Verdict li_yorke_sensitivity_check(const System& sys, const ConeIndex& k,
                                   const AnalysisConfig& cfg);

/// Transitivity, sensitivity, and per-sample equicontinuity side by side, with
/// the exclusion invariant (no system both sensitive and equicontinuous at a
/// point) checked on exact verdicts.
struct DichotomyReport {
    Verdict transitivity;
    Verdict sensitivity;
    std::vector<Verdict> equicontinuity_samples;
    bool exclusion_ok = true;
    std::string summary;
};

DichotomyReport dichotomy_report(const System& sys, const ConeIndex& k, const AnalysisConfig& cfg);

}  // namespace ktc
