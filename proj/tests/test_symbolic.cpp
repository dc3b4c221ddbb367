#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ktc/symbolic.hpp"

#include <random>

using namespace ktc;

namespace {

LatticeVector lv(std::vector<long long> v) {
    std::vector<Int> c(v.begin(), v.end());
    return LatticeVector(std::move(c));
}

SymbolicConfig zeros2() { return SymbolicConfig::uniform(2, 2, 0); }

// Brute first-difference scan over growing boxes; independent of the
// structural equality shortcut inside symbolic_distance.
Dyadic brute_distance(const SymbolicConfig& x, const SymbolicConfig& y, int radius_cap) {
    for (int r = 0; r <= radius_cap; ++r) {
        for (long long a = -r; a <= r; ++a) {
            for (long long b = -r; b <= r; ++b) {
                if (std::max(std::abs(a), std::abs(b)) != r) continue;
                if (x.at(lv({a, b})) != y.at(lv({a, b}))) return Dyadic::pow2_neg(Int(r));
            }
        }
    }
    return Dyadic::zero();
}

// Brute min distance from n to the block-line cells, scanning t directly.
Int brute_block_line_distance(const DiffSet& d, const LatticeVector& n, long long t_cap) {
    Int best = -1;
    Int power = d.base;
    for (Int j = 1; power <= t_cap; ++j, power *= d.base) {
        for (Int t = power; t <= power + j; ++t) {
            Int val = 0;
            for (int i = 0; i < d.dim; ++i) {
                val = std::max(val, abs_int(n[i] - d.offset[i] - t * d.direction[i]));
            }
            if (best < 0 || val < best) best = val;
        }
    }
    return best;
}

SymbolicConfig random_config(std::mt19937_64& rng, bool allow_block) {
    std::uniform_int_distribution<int> bit(0, 1);
    std::uniform_int_distribution<int> per(1, 2);
    std::uniform_int_distribution<int> nd(0, 2);
    std::uniform_int_distribution<long long> pos(-4, 4);
    std::vector<int> period{per(rng), per(rng)};
    std::vector<int> bg;
    for (int i = 0; i < period[0] * period[1]; ++i) bg.push_back(bit(rng));
    std::map<LatticeVector, int> defects;
    const int count = nd(rng);
    for (int i = 0; i < count; ++i) defects[lv({pos(rng), pos(rng)})] = bit(rng);
    std::optional<BlockFamily> block;
    if (allow_block && bit(rng)) {
        BlockFamily b;
        b.direction = lv({1 + bit(rng), 1});
        b.base = 3 + bit(rng);
        b.symbol = bit(rng);
        b.offset = LatticeVector::zero(2);
        block = b;
    }
    return SymbolicConfig(2, period, bg, defects, block);
}

}  // namespace

TEST_CASE("construction validates inputs") {
    CHECK_THROWS_AS(SymbolicConfig(1, {1}, {0}), std::invalid_argument);
    CHECK_THROWS_AS(SymbolicConfig(2, {0}, {}), std::invalid_argument);
    CHECK_THROWS_AS(SymbolicConfig(2, {2}, {0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(SymbolicConfig(2, {1, 1}, {0}, {{lv({0}), 1}}), std::invalid_argument);
    BlockFamily bad;
    bad.direction = lv({0, 0});
    bad.base = 4;
    bad.symbol = 1;
    bad.offset = LatticeVector::zero(2);
    CHECK_THROWS_AS(zeros2().with_block(bad), std::invalid_argument);
    BlockFamily small_base;
    small_base.direction = lv({1, 1});
    small_base.base = 1;
    small_base.symbol = 1;
    small_base.offset = LatticeVector::zero(2);
    CHECK_THROWS_AS(zeros2().with_block(small_base), std::invalid_argument);
}

TEST_CASE("block family symbol lookup") {
    BlockFamily b;
    b.direction = lv({1, 1});
    b.base = 4;
    b.symbol = 1;
    b.offset = LatticeVector::zero(2);
    const auto x = zeros2().with_block(b);
    CHECK(x.at(lv({4, 4})) == 1);
    CHECK(x.at(lv({5, 5})) == 1);
    CHECK(x.at(lv({6, 6})) == 0);
    CHECK(x.at(lv({3, 3})) == 0);
    CHECK(x.at(lv({16, 16})) == 1);
    CHECK(x.at(lv({18, 18})) == 1);
    CHECK(x.at(lv({19, 19})) == 0);
    CHECK(x.at(lv({64, 64})) == 1);
    CHECK(x.at(lv({67, 67})) == 1);
    CHECK(x.at(lv({68, 68})) == 0);
    CHECK(x.at(lv({4, 5})) == 0);
}

TEST_CASE("defects and background") {
    const auto x = zeros2().with_defect(lv({3, 2}), 1);
    CHECK(x.at(lv({3, 2})) == 1);
    CHECK(x.at(lv({0, 0})) == 0);
    CHECK(symbolic_distance(zeros2(), x) == Dyadic::pow2_neg(Int(3)));
}

TEST_CASE("normalization") {
    // defect repeating the background disappears
    const auto x = zeros2().with_defect(lv({1, 1}), 0);
    CHECK(x == zeros2());
    CHECK(x.defects().empty());

    // constant table with larger period reduces
    const SymbolicConfig y(2, {2, 2}, {1, 1, 1, 1});
    CHECK(y.period() == std::vector<int>{1, 1});
    CHECK(y == SymbolicConfig::uniform(2, 2, 1));

    // block family repainting the background disappears
    BlockFamily b;
    b.direction = lv({1, 1});
    b.base = 4;
    b.symbol = 1;
    b.offset = LatticeVector::zero(2);
    const auto z = SymbolicConfig::uniform(2, 2, 1).with_block(b);
    CHECK_FALSE(z.block().has_value());
    CHECK(z == SymbolicConfig::uniform(2, 2, 1));

    // defect under a live block is invisible and dropped
    const auto w = SymbolicConfig(2, {1, 1}, {0}, {{lv({4, 4}), 1}}, b);
    CHECK(w.defects().empty());
    CHECK(w == zeros2().with_block(b));
}

TEST_CASE("structural equality across presentations") {
    const SymbolicConfig a(2, {1, 1}, {0});
    const SymbolicConfig b(2, {2, 2}, {0, 0, 0, 0});
    CHECK(a == b);
    CHECK(symbolic_distance(a, b).is_zero());
    const SymbolicConfig c(2, {2, 1}, {0, 1});
    CHECK(a != c);
    CHECK(symbolic_distance(a, c) == Dyadic::pow2_neg(Int(1)));
}

TEST_CASE("translation acts on all three layers") {
    BlockFamily b;
    b.direction = lv({1, 1});
    b.base = 4;
    b.symbol = 1;
    b.offset = LatticeVector::zero(2);
    const auto x =
        SymbolicConfig(2, {2, 2}, {0, 1, 1, 0}, {{lv({2, 2}), 1}}, b);
    const auto shifted = x.translated(lv({1, 0}));
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> pos(-20, 20);
    for (int i = 0; i < 200; ++i) {
        const auto m = lv({pos(rng), pos(rng)});
        CHECK(shifted.at(m) == x.at(m + lv({1, 0})));
    }
    // defect at p moves to p - n
    const auto y = zeros2().with_defect(lv({0, 0}), 1).translated(lv({1, 0}));
    CHECK(y.at(lv({-1, 0})) == 1);
    CHECK(y.defects().count(lv({-1, 0})) == 1);
}

TEST_CASE("translation round-trips") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 25; ++i) {
        const auto x = random_config(rng, true);
        const auto n = lv({3, -2});
        CHECK(x.translated(n).translated(-n) == x);
    }
}

TEST_CASE("symbolic_distance agrees with the brute scan") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 60; ++i) {
        const auto x = random_config(rng, true);
        const auto y = random_config(rng, true);
        CHECK(symbolic_distance(x, y) == brute_distance(x, y, 40));
        CHECK(symbolic_distance(x, y) == symbolic_distance(y, x));
        CHECK(symbolic_distance(x, x).is_zero());
    }
}

TEST_CASE("difference_set canonical shapes") {
    const auto x = zeros2();

    const auto fin = difference_set(x, x.with_defect(lv({0, 0}), 1));
    REQUIRE(fin.kind == DiffSet::Kind::finite);
    REQUIRE(fin.cells.size() == 1);
    CHECK(fin.cells[0] == lv({0, 0}));

    const SymbolicConfig residue(2, {2, 2}, {1, 0, 0, 0});
    const auto per = difference_set(x, residue);
    REQUIRE(per.kind == DiffSet::Kind::periodic);
    CHECK(per.period == std::vector<int>{2, 2});
    REQUIRE(per.residues.size() == 1);
    CHECK(per.residues[0] == lv({0, 0}));
    CHECK(periodic_covering_radius(per) == 1);

    BlockFamily b;
    b.direction = lv({1, 1});
    b.base = 4;
    b.symbol = 1;
    b.offset = LatticeVector::zero(2);
    const auto bl = difference_set(x, x.with_block(b));
    REQUIRE(bl.kind == DiffSet::Kind::block_line);
    CHECK(bl.direction == lv({1, 1}));
    CHECK(bl.base == 4);

    CHECK(difference_set(x, x).kind == DiffSet::Kind::empty);
}

TEST_CASE("difference_set symmetry and opaque fallbacks") {
    const auto x = zeros2();
    BlockFamily b4;
    b4.direction = lv({1, 1});
    b4.base = 4;
    b4.symbol = 1;
    b4.offset = LatticeVector::zero(2);
    BlockFamily b5 = b4;
    b5.base = 5;

    // two distinct block families
    CHECK(difference_set(x.with_block(b4), x.with_block(b5)).kind == DiffSet::Kind::opaque);

    // periodic difference disturbed by a defect
    const SymbolicConfig residue(2, {2, 2}, {1, 0, 0, 0});
    CHECK(difference_set(x, residue.with_defect(lv({0, 0}), 0)).kind == DiffSet::Kind::opaque);

    // block line thinned by a matching defect underneath
    CHECK(difference_set(x.with_defect(lv({4, 4}), 1), x.with_block(b4)).kind ==
          DiffSet::Kind::opaque);

    // identical blocks cancel; leftover defect difference is finite
    const auto dd =
        difference_set(x.with_block(b4), x.with_block(b4).with_defect(lv({0, 1}), 1));
    REQUIRE(dd.kind == DiffSet::Kind::finite);
    CHECK(dd.cells[0] == lv({0, 1}));

    // symmetry of the classification
    for (const auto& [u, v] : {std::pair{x, x.with_block(b4)}}) {
        CHECK(difference_set(u, v).kind == difference_set(v, u).kind);
    }
}

TEST_CASE("diffset_profile_value closed forms") {
    const auto fin = DiffSet::make_finite({lv({0, 0})});
    CHECK(diffset_profile_value(fin, lv({3, 2})) == Dyadic::pow2_neg(Int(3)));
    CHECK(diffset_profile_value(fin, lv({0, 0})) == Dyadic::one());

    const auto per = DiffSet::make_periodic({2, 2}, {lv({0, 0})});
    CHECK(diffset_profile_value(per, lv({1, 1})) == Dyadic::pow2_neg(Int(1)));
    CHECK(diffset_profile_value(per, lv({2, 2})) == Dyadic::one());
    CHECK(diffset_profile_value(per, lv({17, 4})) == Dyadic::pow2_neg(Int(1)));

    CHECK_THROWS_AS(diffset_profile_value(DiffSet::make_opaque(2), lv({0, 0})),
                    std::domain_error);
}

TEST_CASE("block line distance matches brute enumeration") {
    for (long long vx : {1LL, 2LL}) {
        for (long long vy : {1LL, -1LL}) {
            const auto d = DiffSet::make_block_line(lv({vx, vy}), Int(4), lv({0, 1}));
            std::mt19937_64 rng(5);
            std::uniform_int_distribution<long long> pos(-30, 30);
            for (int i = 0; i < 120; ++i) {
                const auto n = lv({pos(rng), pos(rng)});
                const Int brute = brute_block_line_distance(d, n, 600);
                CHECK(diffset_profile_value(d, n) == Dyadic::pow2_neg(brute));
            }
        }
    }
}

TEST_CASE("profile identity: distance of translates equals the diff-set value") {
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<long long> pos(-9, 9);
    int structured = 0;
    for (int i = 0; i < 80; ++i) {
        const auto x = random_config(rng, true);
        const auto y = random_config(rng, true);
        const auto d = difference_set(x, y);
        if (d.kind == DiffSet::Kind::opaque) continue;
        ++structured;
        for (int rep = 0; rep < 8; ++rep) {
            const auto n = lv({pos(rng), pos(rng)});
            const auto direct = symbolic_distance(x.translated(n), y.translated(n));
            CHECK(diffset_profile_value(d, n) == direct);
        }
    }
    CHECK(structured > 10);
}
