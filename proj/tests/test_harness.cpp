#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ktc/harness.hpp"

#include <map>
#include <string>

using namespace ktc;

namespace {

const TheoremCase& find_case(const std::vector<TheoremCase>& cases, const std::string& needle) {
    for (const auto& c : cases) {
        if (c.id.find(needle) != std::string::npos) return c;
    }
    FAIL("no case matching ", needle);
    static TheoremCase dummy;
    return dummy;
}

int count_status(const std::vector<TheoremCase>& cases, CaseStatus s) {
    int n = 0;
    for (const auto& c : cases) {
        if (c.status == s) ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("the standard battery never refutes and confirms the bulk") {
    const AnalysisConfig cfg;
    const auto all = standard_battery(cfg);

    for (const auto& c : all) {
        INFO(describe_case(c));
        CHECK(c.status != CaseStatus::refuted);
    }
    CHECK_FALSE(any_refuted(all));
    CHECK(count_status(all, CaseStatus::confirmed) >= 50);
    CHECK(all.size() >= 70);

    // Canonical ordering: ids are unique and the battery is reproducible.
    std::map<std::string, int> ids;
    for (const auto& c : all) ++ids[c.id];
    for (const auto& [id, n] : ids) {
        INFO(id);
        CHECK(n == 1);
    }
    const auto again = standard_battery(cfg);
    REQUIRE(again.size() == all.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(again[i].id == all[i].id);
        CHECK(again[i].status == all[i].status);
    }
}

TEST_CASE("induced transfers: present unit confirms, absent unit goes inconclusive") {
    const AnalysisConfig cfg;
    const auto shift1 = make_shift(1, 2);

    SUBCASE("h=(2,-1): unit (1,1), all transfer cases confirmed") {
        const auto cases =
            induced_suite(shift1, LinearForm({Int(2), Int(-1)}), ConeIndex(1, 2), cfg);
        for (const char* id : {"sensitivity-transfer", "transitivity-transfer",
                               "li-yorke-sensitivity-transfer", "chaos-corollary",
                               "periodic-point", "asymptotic-pair", "nonasymptotic-pair",
                               "li-yorke-pair"}) {
            const auto& c = find_case(cases, id);
            INFO(describe_case(c));
            CHECK(c.status == CaseStatus::confirmed);
        }
        const auto& pp = find_case(cases, "periodic-point");
        REQUIRE(pp.conclusions.size() == 1);
        const auto& w = pp.conclusions[0].second.witness;
        REQUIRE(w.has_value());
        REQUIRE(w->lattice_points.size() == 1);
        CHECK(w->lattice_points[0] == LatticeVector{{Int(2), Int(2)}});

        // No battery pair is exactly asymptotic when the cone image covers
        // the lattice, so the converse direction stays visible but open.
        const auto& conv = find_case(cases, "asymptotic-converse");
        CHECK(conv.status == CaseStatus::inconclusive);
        CHECK(conv.note.find("battery") != std::string::npos);
    }

    SUBCASE("h=(1,1): no unit in bound 10, dependent cases inconclusive") {
        const auto cases =
            induced_suite(shift1, LinearForm({Int(1), Int(1)}), ConeIndex(1, 2), cfg);
        for (const auto& c : cases) {
            INFO(describe_case(c));
            CHECK(c.status == CaseStatus::inconclusive);
            bool has_unit_hyp = false;
            for (const auto& [label, v] : c.hypotheses) {
                if (label == "a cone unit exists") {
                    has_unit_hyp = true;
                    CHECK(v.outcome == Outcome::unknown);
                    REQUIRE(v.witness.has_value());
                    CHECK(v.witness->notes.find("bound 10") != std::string::npos);
                }
            }
            CHECK(has_unit_hyp);
        }
        // The converse case still verifies its conclusion on the instance it
        // finds, it just cannot discharge the unit hypothesis.
        const auto& conv = find_case(cases, "asymptotic-converse");
        REQUIRE(conv.conclusions.size() == 1);
        CHECK(conv.conclusions[0].second.outcome == Outcome::yes);
    }

    SUBCASE("h=(1): unit (1), converse direction confirmed on the defect pair") {
        const auto cases = induced_suite(shift1, LinearForm({Int(1)}), ConeIndex(1, 1), cfg);
        for (const auto& c : cases) {
            INFO(describe_case(c));
            CHECK(c.status == CaseStatus::confirmed);
        }
    }

    SUBCASE("isometric base: equicontinuity transfer") {
        const auto rot = make_rotation_induced(0.6180339887498949, LinearForm({Int(1)}));
        const auto cases =
            induced_suite(rot, LinearForm({Int(1), Int(1)}), ConeIndex(1, 2), cfg);
        const auto& eq = find_case(cases, "equicontinuity-transfer");
        INFO(describe_case(eq));
        CHECK(eq.status == CaseStatus::confirmed);
    }

    CHECK_THROWS_AS(induced_suite(make_shift(2, 2), LinearForm({Int(1), Int(1)}),
                                  ConeIndex(1, 2), cfg),
                    std::invalid_argument);
}

TEST_CASE("conjugacy suite checks the maps and rejects non-conjugacies") {
    const AnalysisConfig cfg;
    const auto shift2 = make_shift(2, 2);
    const ConeIndex k1(1, 2);

    const auto swap_map = [](const Point& p) {
        const SymbolicConfig& c = p.as_config();
        std::vector<int> bg = c.background();
        for (auto& s : bg) s = 1 - s;
        std::map<LatticeVector, int> defects;
        for (const auto& [cell, s] : c.defects()) defects[cell] = 1 - s;
        std::optional<BlockFamily> block = c.block();
        if (block) block->symbol = 1 - block->symbol;
        return Point::config(
            SymbolicConfig(c.alphabet(), c.period(), std::move(bg), std::move(defects), block));
    };

    const auto cases = conjugacy_suite(shift2, shift2, swap_map, swap_map, k1, cfg);
    CHECK(cases.size() == 14);  // identity + 10 pairs + 3 system-level
    for (const auto& c : cases) {
        INFO(describe_case(c));
        CHECK(c.status == CaseStatus::confirmed);
    }

    // A map that edits one cell is an involution but does not commute with
    // the translations.
    const auto broken = [](const Point& p) {
        const SymbolicConfig& c = p.as_config();
        const LatticeVector origin = LatticeVector::zero(2);
        return Point::config(c.with_defect(origin, 1 - c.at(origin)));
    };
    CHECK_THROWS_AS(conjugacy_suite(shift2, shift2, broken, broken, k1, cfg),
                    std::invalid_argument);
}

TEST_CASE("product suite transports sensitivity and embeds pairs") {
    const AnalysisConfig cfg;
    const auto shift2 = make_shift(2, 2);
    const auto rot2 =
        make_rotation_induced(0.6180339887498949, LinearForm({Int(1), Int(1)}));
    const ConeIndex k1(1, 2);

    const auto cases = product_suite(shift2, rot2, k1, cfg);
    const auto& sens = find_case(cases, "sensitivity-transport");
    INFO(describe_case(sens));
    CHECK(sens.status == CaseStatus::confirmed);
    CHECK(sens.conclusions[0].second.rule == "product-transport");
    CHECK(sens.conclusions[0].second.exact);

    const auto& embed = find_case(cases, "embedded-pair");
    INFO(describe_case(embed));
    CHECK(embed.status == CaseStatus::confirmed);
    for (const auto& [label, v] : embed.conclusions) CHECK(v.outcome == Outcome::yes);

    // The composition case is not applicable here (the shift factor is
    // sensitive) and must report that, not refute.
    const auto& comp = find_case(cases, "non-sensitivity-composition");
    CHECK(comp.status == CaseStatus::inconclusive);

    const auto rot1 = make_rotation_induced(0.6180339887498949, LinearForm({Int(1)}));
    const auto iso = product_suite(rot1, rot1, ConeIndex(1, 1), cfg);
    const auto& comp2 = find_case(iso, "non-sensitivity-composition");
    INFO(describe_case(comp2));
    CHECK(comp2.status == CaseStatus::confirmed);
}

TEST_CASE("dichotomy suite holds on the battery and on finite G_l sections") {
    const AnalysisConfig cfg;
    const auto cases = dichotomy_suite(cfg);
    REQUIRE(cases.size() == 4);
    for (const auto& c : cases) {
        INFO(describe_case(c));
        CHECK(c.status == CaseStatus::confirmed);
    }
    const auto& gl = find_case(cases, "gl-intersection");
    CHECK(gl.conclusions[0].second.exact);
}
