#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ktc/lattice.hpp"

#include <cstdlib>
#include <set>

using namespace ktc;

namespace {

LatticeVector lv(std::vector<long long> v) {
    std::vector<Int> c(v.begin(), v.end());
    return LatticeVector(std::move(c));
}

// Independent evaluation of the cone order: derives the sign pattern by
// repeated division instead of bit masking, and compares signed coordinates
// one by one.
bool cone_greater_reference(int k, const LatticeVector& a, const LatticeVector& b) {
    int rest = k - 1;
    for (int i = 0; i < a.dim(); ++i) {
        const int bit = rest % 2;
        rest /= 2;
        const Int diff = a[i] - b[i];
        if (bit == 0 && diff <= 0) return false;
        if (bit == 1 && diff >= 0) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("cone_greater matches the sign formula on full boxes") {
    for (int d = 1; d <= 2; ++d) {
        const auto box = full_box(d, 3);
        for (int k = 1; k <= (1 << d); ++k) {
            ConeIndex cone(k, d);
            for (const auto& a : box) {
                for (const auto& b : box) {
                    CHECK(cone_greater(cone, a, b) == cone_greater_reference(k, a, b));
                }
            }
        }
    }
}

TEST_CASE("cone_greater examples") {
    ConeIndex k2(2, 2);
    CHECK(cone_greater(k2, lv({-2, 3}), lv({0, 0})));
    CHECK_FALSE(cone_greater(k2, lv({2, 3}), lv({0, 0})));
    ConeIndex k1(1, 2);
    CHECK(cone_greater(k1, lv({1, 1}), lv({0, 0})));
    CHECK_FALSE(cone_greater(k1, lv({1, 0}), lv({0, 0})));
}

TEST_CASE("cone order is a strict partial order compatible with translation") {
    const auto box = full_box(2, 2);
    for (int k = 1; k <= 4; ++k) {
        ConeIndex cone(k, 2);
        for (const auto& a : box) {
            CHECK_FALSE(cone_greater(cone, a, a));
            for (const auto& b : box) {
                if (cone_greater(cone, a, b)) CHECK_FALSE(cone_greater(cone, b, a));
                // translation invariance
                const auto c = lv({5, -7});
                CHECK(cone_greater(cone, a + c, b + c) == cone_greater(cone, a, b));
                for (const auto& m : box) {
                    if (cone_greater(cone, a, b) && cone_greater(cone, b, m)) {
                        CHECK(cone_greater(cone, a, m));
                    }
                }
            }
        }
    }
}

TEST_CASE("d=1 cones reduce to the integer order") {
    ConeIndex up(1, 1), down(2, 1);
    for (long long a = -4; a <= 4; ++a) {
        for (long long b = -4; b <= 4; ++b) {
            CHECK(cone_greater(up, lv({a}), lv({b})) == (a > b));
            CHECK(cone_greater(down, lv({a}), lv({b})) == (a < b));
        }
    }
}

TEST_CASE("cone_shell canonical order") {
    ConeIndex k1(1, 2);
    const auto shell = cone_shell(k1, 2);
    REQUIRE(shell.size() == 4);
    CHECK(shell[0] == lv({1, 1}));
    CHECK(shell[1] == lv({1, 2}));
    CHECK(shell[2] == lv({2, 1}));
    CHECK(shell[3] == lv({2, 2}));

    ConeIndex k2(2, 2);
    const auto shell2 = cone_shell(k2, 1);
    REQUIRE(shell2.size() == 1);
    CHECK(shell2[0] == lv({-1, 1}));
}

TEST_CASE("cone_shell prefix property, size, and membership") {
    for (int d = 1; d <= 3; ++d) {
        for (int k = 1; k <= (1 << d); ++k) {
            ConeIndex cone(k, d);
            std::vector<LatticeVector> prev;
            for (int n = 1; n <= 3; ++n) {
                const auto cur = cone_shell(cone, n);
                Int expected = 1;
                for (int i = 0; i < d; ++i) expected *= n;
                CHECK(Int(cur.size()) == expected);
                REQUIRE(cur.size() >= prev.size());
                for (std::size_t i = 0; i < prev.size(); ++i) CHECK(cur[i] == prev[i]);
                for (const auto& v : cur) {
                    CHECK(cone_greater(cone, v, LatticeVector::zero(d)));
                    CHECK(v.max_norm() <= n);
                }
                prev = cur;
            }
        }
    }
}

TEST_CASE("cone_shell entries are unique") {
    ConeIndex cone(3, 2);
    const auto pts = cone_shell(cone, 4);
    std::set<std::vector<Int>> seen;
    for (const auto& v : pts) seen.insert(v.coords());
    CHECK(seen.size() == pts.size());
}

TEST_CASE("r_eval") {
    LinearForm h({Int(2), Int(-1)});
    CHECK(r_eval(h, lv({1, 1})) == 1);
    CHECK(r_eval(h, lv({3, 5})) == 1);
    CHECK_THROWS_AS(r_eval(h, lv({1, 1, 1})), std::invalid_argument);
}

TEST_CASE("solve_cone_unit finds the first shell-order solution") {
    {
        ConeUnitSearch res = solve_cone_unit(LinearForm({Int(2), Int(-1)}), ConeIndex(1, 2), 3);
        REQUIRE(res.solution.has_value());
        CHECK(*res.solution == lv({1, 1}));
        CHECK(res.searched_bound == 3);
    }
    {
        ConeUnitSearch res = solve_cone_unit(LinearForm({Int(1), Int(1)}), ConeIndex(2, 2), 3);
        REQUIRE(res.solution.has_value());
        CHECK(*res.solution == lv({-1, 2}));
    }
    {
        ConeUnitSearch res = solve_cone_unit(LinearForm({Int(1), Int(1)}), ConeIndex(1, 2), 10);
        CHECK_FALSE(res.solution.has_value());
        CHECK(res.searched_bound == 10);
    }
    {
        ConeUnitSearch res = solve_cone_unit(LinearForm({Int(1)}), ConeIndex(1, 1), 1);
        REQUIRE(res.solution.has_value());
        CHECK(*res.solution == lv({1}));
    }
}

TEST_CASE("solve_cone_unit agrees with a brute scan") {
    const LinearForm h({Int(3), Int(-2)});
    for (int k = 1; k <= 4; ++k) {
        ConeIndex cone(k, 2);
        const auto res = solve_cone_unit(h, cone, 6);
        std::optional<LatticeVector> brute;
        for (const auto& m : cone_shell(cone, 6)) {
            if (r_eval(h, m) == 1) {
                brute = m;
                break;
            }
        }
        CHECK(res.solution.has_value() == brute.has_value());
        if (brute) CHECK(*res.solution == *brute);
    }
}

TEST_CASE("scale_cone_unit") {
    const LinearForm h({Int(2), Int(-1)});
    const auto m = lv({1, 1});
    const auto scaled = scale_cone_unit(m, Int(3), h);
    CHECK(scaled == lv({3, 3}));
    CHECK(r_eval(h, scaled) == 3);

    const LinearForm h2({Int(1), Int(1)});
    CHECK(scale_cone_unit(lv({-1, 2}), Int(4), h2) == lv({-4, 8}));
    CHECK_THROWS_AS(scale_cone_unit(lv({1, 1}), Int(2), h2), std::invalid_argument);
    CHECK_THROWS_AS(scale_cone_unit(m, Int(0), h), std::invalid_argument);
}

TEST_CASE("scaling stays in the cone and scales r linearly") {
    for (int k = 1; k <= 4; ++k) {
        ConeIndex cone(k, 2);
        const LinearForm h({Int(2), Int(-1)});
        const auto res = solve_cone_unit(h, cone, 8);
        if (!res.solution) continue;
        for (long long n = 1; n <= 5; ++n) {
            const auto nm = scale_cone_unit(*res.solution, Int(n), h);
            CHECK(cone_greater(cone, nm, LatticeVector::zero(2)));
            CHECK(r_eval(h, nm) == n);
        }
    }
}

TEST_CASE("ConeIndex validates its range") {
    CHECK_THROWS_AS(ConeIndex(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(ConeIndex(5, 2), std::invalid_argument);
    CHECK_NOTHROW(ConeIndex(4, 2));
}

TEST_CASE("full_box is canonical and complete") {
    const auto box = full_box(2, 1);
    REQUIRE(box.size() == 9);
    CHECK(box[0] == lv({0, 0}));
    CHECK(box[1] == lv({-1, -1}));
    std::set<std::vector<Int>> seen;
    for (const auto& v : box) seen.insert(v.coords());
    CHECK(seen.size() == 9);
}
