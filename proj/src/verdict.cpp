#include "ktc/verdict.hpp"

#include <stdexcept>

namespace ktc {

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::yes: return "yes";
        case Outcome::no: return "no";
        case Outcome::unknown: return "unknown";
    }
    return "unknown";
}

Verdict Verdict::yes(std::string rule, bool exact, std::optional<Witness> w, int window) {
    return Verdict{Outcome::yes, std::move(rule), exact, std::move(w), window};
}

Verdict Verdict::no(std::string rule, bool exact, std::optional<Witness> w, int window) {
    return Verdict{Outcome::no, std::move(rule), exact, std::move(w), window};
}

Verdict Verdict::unknown(std::string rule, int window) {
    return Verdict{Outcome::unknown, std::move(rule), false, std::nullopt, window};
}

void AnalysisConfig::validate() const {
    if (window < 1) throw std::invalid_argument("analysis window must be >= 1");
    if (eps_grid.empty()) throw std::invalid_argument("eps grid must be nonempty");
    Rational prev;
    bool first = true;
    for (const Rational& e : eps_grid) {
        if (e <= 0) throw std::invalid_argument("eps grid entries must be positive");
        if (!first && e >= prev)
            throw std::invalid_argument("eps grid must be strictly decreasing");
        prev = e;
        first = false;
    }
    if (delta <= 0) throw std::invalid_argument("delta must be positive");
    if (sample_count < 1) throw std::invalid_argument("sample count must be >= 1");
}

}  // namespace ktc
