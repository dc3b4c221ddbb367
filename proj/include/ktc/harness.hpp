#pragma once

#include "ktc/analysis.hpp"
#include "ktc/system.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ktc {

enum class CaseStatus { confirmed, refuted, inconclusive };

const char* case_status_name(CaseStatus s);

/// One executable instance of a preservation or transfer statement. The
/// recorded hypothesis and conclusion verdicts determine the status:
/// confirmed when every hypothesis and conclusion is Yes, refuted when every
/// hypothesis is exactly Yes and some conclusion is exactly No, inconclusive
/// otherwise. A refuted case signals an implementation bug (the statements
/// hold unconditionally) and must fail any suite run.
struct TheoremCase {
    std::string id;         // stable slug, canonical within a suite
    std::string statement;  // the implication being instantiated
    std::string instance;   // concrete systems, points, cone
    std::vector<std::pair<std::string, Verdict>> hypotheses;
    std::vector<std::pair<std::string, Verdict>> conclusions;
    CaseStatus status = CaseStatus::inconclusive;
    std::string note;
};

/// Pair-classification invariance across a conjugacy, plus transport of
/// sensitivity, Li-Yorke sensitivity, and sampled equicontinuity. Verdict
/// equality is asserted on decided verdicts only; Unknown matches anything.
/// Throws std::invalid_argument when the maps fail the mutual-inverse or
/// generator-commutation identity on sampled points.
std::vector<TheoremCase> conjugacy_suite(const SystemHandle& a, const SystemHandle& b,
                                         const PointMap& forward, const PointMap& backward,
                                         const ConeIndex& k, const AnalysisConfig& cfg);

/// Sensitivity/Li-Yorke-sensitivity transport from a factor to the product,
/// the embedded-pair identity for a fixed second coordinate, and composition
/// of non-sensitivity.
std::vector<TheoremCase> product_suite(const SystemHandle& a, const SystemHandle& b,
                                       const ConeIndex& k, const AnalysisConfig& cfg);

/// Transfer statements for the action induced from a dimension-1 system by
/// the integer form h. Cases that need a cone unit (some m above 0 in the
/// k-cone with r(m) = 1) carry that hypothesis explicitly; when the bounded
/// search finds none, the dependent cases report inconclusive.
std::vector<TheoremCase> induced_suite(const SystemHandle& base, const LinearForm& h,
                                       const ConeIndex& k, const AnalysisConfig& cfg);

/// Sensitivity/equicontinuity exclusion over a fixed battery of systems, and
/// the identity between the equicontinuity set and the intersection of the
/// G_l sets on finite systems.
std::vector<TheoremCase> dichotomy_suite(const AnalysisConfig& cfg);

/// Every suite over its canonical instances, in canonical order.
std::vector<TheoremCase> standard_battery(const AnalysisConfig& cfg);

bool any_refuted(const std::vector<TheoremCase>& cases);

/// Multi-line human-readable rendering of one case (status, verdicts, note).
std::string describe_case(const TheoremCase& c);

}  // namespace ktc
