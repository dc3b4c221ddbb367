#pragma once

#include "ktc/analysis.hpp"
#include "ktc/harness.hpp"
#include "ktc/profile.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace ktc {

inline constexpr int kReportSchemaVersion = 1;

/// JSON conventions: rationals are "p/q" strings, dyadic distances are
/// {"exp": e} objects (value 2^e) or {"zero": true}, floating values are
/// decimal strings with 17 significant digits. Key order is fixed, so a
/// report serializes to identical bytes for identical inputs.
using Json = nlohmann::ordered_json;

std::string rational_string(const Rational& r);
std::string double_string(double v);

Json int_json(const Int& v);
Json rational_json(const Rational& r);
Json dyadic_json(const Dyadic& d);
Json dist_json(const Dist& d);
Json lattice_vector_json(const LatticeVector& v);
Json verdict_json(const Verdict& v);
Json pair_class_json(const PairClass& pc);
Json profile_json(const std::vector<ProfileEntry>& profile);
Json theorem_case_json(const TheoremCase& c);
Json dichotomy_json(const DichotomyReport& r);

/// Wraps analysis results into the versioned report envelope.
Json make_report(Json results);

/// Canonical text rendering (2-space indent, trailing newline).
std::string render_report(const Json& report);

/// Structural validation of a parsed report; throws std::invalid_argument
/// with the offending path on schema violations.
void validate_report(const Json& report);

/// CSV rendering of a distance profile: columns n_1..n_d,distance_exp where
/// distance_exp is the base-2 exponent of the distance ("-inf" for zero,
/// a decimal string for values that are not powers of two).
std::string profile_csv(const std::vector<ProfileEntry>& profile, int dim);

}  // namespace ktc
