#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ktc/classical.hpp"

using namespace ktc;

namespace {

LatticeVector lv1(long long v) { return LatticeVector({Int(v)}); }

BlockFamily fam1(long long dir, long long base, int symbol) {
    BlockFamily f;
    f.direction = lv1(dir);
    f.base = Int(base);
    f.symbol = symbol;
    f.offset = lv1(0);
    return f;
}

void check(const ClassicalPairClass& c, Outcome prox, Outcome asym, Outcome ly,
           const Rational& lo, const Rational& hi) {
    CHECK(c.proximal == prox);
    CHECK(c.asymptotic == asym);
    CHECK(c.li_yorke == ly);
    REQUIRE(c.liminf.has_value());
    REQUIRE(c.limsup.has_value());
    CHECK(*c.liminf == lo);
    CHECK(*c.limsup == hi);
}

}  // namespace

TEST_CASE("equal and finitely-different pairs vanish forward") {
    const auto uni = SymbolicConfig::uniform(1, 2, 0);
    check(classical_classify(uni, uni), Outcome::yes, Outcome::yes, Outcome::no, Rational(0),
          Rational(0));

    const auto one = uni.with_defect(lv1(5), 1);
    check(classical_classify(uni, one), Outcome::yes, Outcome::yes, Outcome::no, Rational(0),
          Rational(0));

    const auto two = one.with_defect(lv1(-3), 1);
    check(classical_classify(uni, two), Outcome::yes, Outcome::yes, Outcome::no, Rational(0),
          Rational(0));
    check(classical_classify(one, two), Outcome::yes, Outcome::yes, Outcome::no, Rational(0),
          Rational(0));
}

TEST_CASE("periodic disagreements oscillate within a band") {
    const auto uni = SymbolicConfig::uniform(1, 2, 0);

    const SymbolicConfig p2(2, {2}, {0, 1});
    check(classical_classify(uni, p2), Outcome::no, Outcome::no, Outcome::no,
          make_rational(1, 2), Rational(1));

    const SymbolicConfig p3(2, {3}, {1, 0, 0});
    check(classical_classify(uni, p3), Outcome::no, Outcome::no, Outcome::no,
          make_rational(1, 2), Rational(1));

    // Disagreement on every cell: the profile is constantly 1.
    const SymbolicConfig a(2, {2}, {0, 1});
    const SymbolicConfig b(2, {2}, {1, 0});
    check(classical_classify(a, b), Outcome::no, Outcome::no, Outcome::no, Rational(1),
          Rational(1));

    // Defects on top of a periodic disagreement do not move the band.
    const auto p2d = p2.with_defect(lv1(7), 0);
    check(classical_classify(uni, p2d), Outcome::no, Outcome::no, Outcome::no,
          make_rational(1, 2), Rational(1));
}

TEST_CASE("forward block families give Li-Yorke pairs; leftward ones vanish") {
    const auto uni = SymbolicConfig::uniform(1, 2, 0);

    check(classical_classify(uni, uni.with_block(fam1(1, 2, 1))), Outcome::yes, Outcome::no,
          Outcome::yes, Rational(0), Rational(1));
    check(classical_classify(uni, uni.with_block(fam1(1, 4, 1))), Outcome::yes, Outcome::no,
          Outcome::yes, Rational(0), Rational(1));
    check(classical_classify(uni, uni.with_block(fam1(2, 3, 1))), Outcome::yes, Outcome::no,
          Outcome::yes, Rational(0), Rational(1));

    check(classical_classify(uni, uni.with_block(fam1(-1, 2, 1))), Outcome::yes, Outcome::yes,
          Outcome::no, Rational(0), Rational(0));

    // Symmetry in the arguments.
    check(classical_classify(uni.with_block(fam1(1, 2, 1)), uni), Outcome::yes, Outcome::no,
          Outcome::yes, Rational(0), Rational(1));
}

TEST_CASE("blocks that agree with the background leave only finite noise") {
    const auto base = SymbolicConfig::uniform(1, 2, 0).with_defect(lv1(4), 1);
    // Symbol 0 blocks overwrite background 0; the only disagreements are the
    // finitely many defect collisions.
    const auto blocked = base.with_block(fam1(1, 2, 0));
    check(classical_classify(base, blocked), Outcome::yes, Outcome::yes, Outcome::no, Rational(0),
          Rational(0));
}

TEST_CASE("unsupported shapes are rejected") {
    const auto uni = SymbolicConfig::uniform(1, 2, 0);
    const auto b1 = uni.with_block(fam1(1, 2, 1));
    const auto b2 = uni.with_block(fam1(1, 3, 1));
    CHECK_THROWS_AS(classical_classify(b1, b2), std::domain_error);

    const SymbolicConfig p2(2, {2}, {0, 1});
    CHECK_THROWS_AS(classical_classify(p2, uni.with_block(fam1(1, 2, 1))), std::domain_error);

    const SymbolicConfig flat2(2, {1}, {0});
    const SymbolicConfig wide(2, std::vector<int>{1, 1}, {0});
    CHECK_THROWS_AS(classical_classify(flat2, wide), std::invalid_argument);
}

TEST_CASE("constructive classical shift facts") {
    const Verdict s = classical_shift_sensitivity();
    CHECK(s.outcome == Outcome::yes);
    CHECK(s.exact);
    CHECK(s.rule == "classical-shift-flip");

    const Verdict t = classical_shift_transitivity();
    CHECK(t.outcome == Outcome::yes);
    CHECK(t.exact);
    CHECK(t.rule == "classical-cylinder-splice");
    REQUIRE(t.witness.has_value());
    REQUIRE(t.witness->lattice_points.size() == 1);
    CHECK(t.witness->lattice_points[0] == lv1(3));

    const Verdict l = classical_shift_li_yorke_sensitivity();
    CHECK(l.outcome == Outcome::yes);
    CHECK(l.exact);
    CHECK(l.rule == "classical-blockline");
}
