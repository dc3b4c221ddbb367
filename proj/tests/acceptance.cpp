// Acceptance gate: one pass/fail line per criterion, exit 0 only if all pass.
// Every expected value here is either pinned by an independent computation in
// this file (sign formula, exhaustive oracle, brute profiles, the classical
// reference) or is a constructive witness re-verified from first principles.

#include "ktc/analysis.hpp"
#include "ktc/classical.hpp"
#include "ktc/harness.hpp"
#include "ktc/oracle.hpp"
#include "ktc/system.hpp"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace ktc;

namespace {

LatticeVector lv(std::vector<long long> v) {
    std::vector<Int> c(v.begin(), v.end());
    return LatticeVector{std::move(c)};
}

BlockFamily fam(LatticeVector dir, long long base, int symbol) {
    BlockFamily f;
    f.direction = std::move(dir);
    f.base = Int(base);
    f.symbol = symbol;
    f.offset = LatticeVector::zero(f.direction.dim());
    return f;
}

FiniteSpace cycle_space(int n) {
    std::vector<Rational> t;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int raw = std::abs(i - j);
            t.push_back(make_rational(std::min(raw, n - raw), n));
        }
    }
    return FiniteSpace(n, t);
}

constexpr double kAlpha = 0.6180339887498949;

/// The ten shift pairs used for conjugacy/product invariance: every structural
/// difference shape, plus an identical pair.
std::vector<std::pair<SymbolicConfig, SymbolicConfig>> shift_pairs_2d() {
    const SymbolicConfig u = SymbolicConfig::uniform(2, 2, 0);
    std::vector<std::pair<SymbolicConfig, SymbolicConfig>> out;
    out.emplace_back(u, u.with_defect(lv({0, 0}), 1));
    out.emplace_back(u, u.with_defect(lv({1, -2}), 1).with_defect(lv({0, 3}), 1));
    out.emplace_back(u, u.with_block(fam(lv({1, 1}), 2, 1)));
    out.emplace_back(u, u.with_block(fam(lv({1, 0}), 2, 1)));
    out.emplace_back(u, SymbolicConfig(2, {2, 2}, {1, 0, 0, 0}));
    out.emplace_back(u, SymbolicConfig::uniform(2, 2, 1));
    out.emplace_back(u, SymbolicConfig(2, {2, 1}, {0, 1}));
    out.emplace_back(u.with_defect(lv({2, 2}), 1), u.with_defect(lv({-1, 0}), 1));
    out.emplace_back(u, u.with_block(fam(lv({1, -1}), 2, 1)));
    out.emplace_back(u, u);
    return out;
}

bool verdicts_exactly_equal(const Verdict& a, const Verdict& b, std::string& detail) {
    if (a.outcome != b.outcome) {
        detail = std::string("outcomes differ: ") + outcome_name(a.outcome) + " vs " +
                 outcome_name(b.outcome);
        return false;
    }
    if (!a.exact || !b.exact) {
        detail = "verdict not exact (" + a.rule + " / " + b.rule + ")";
        return false;
    }
    return true;
}

bool classifications_exactly_equal(const PairClass& a, const PairClass& b, std::string& detail) {
    if (!verdicts_exactly_equal(a.proximal, b.proximal, detail)) return false;
    if (!verdicts_exactly_equal(a.asymptotic, b.asymptotic, detail)) return false;
    if (!verdicts_exactly_equal(a.li_yorke, b.li_yorke, detail)) return false;
    if (a.liminf != b.liminf || a.limsup != b.limsup) {
        detail = "profile liminf/limsup differ";
        return false;
    }
    if (a.asymptotic_at.size() != b.asymptotic_at.size()) {
        detail = "epsilon grids differ in size";
        return false;
    }
    for (std::size_t i = 0; i < a.asymptotic_at.size(); ++i) {
        if (a.asymptotic_at[i].first != b.asymptotic_at[i].first ||
            !verdicts_exactly_equal(a.asymptotic_at[i].second, b.asymptotic_at[i].second,
                                    detail)) {
            detail = "epsilon-grid verdicts differ at index " + std::to_string(i);
            return false;
        }
    }
    return true;
}

const TheoremCase* find_case(const std::vector<TheoremCase>& cases, const std::string& suffix) {
    for (const auto& c : cases) {
        if (c.id.size() >= suffix.size() &&
            c.id.compare(c.id.size() - suffix.size(), suffix.size(), suffix) == 0) {
            return &c;
        }
    }
    return nullptr;
}

// ---- criterion 1: the cone order against an independent sign formula ----

bool criterion_cone_order(std::string& detail) {
    for (int d = 1; d <= 3; ++d) {
        const auto box = full_box(d, 3);
        for (int kk = 1; kk <= (1 << d); ++kk) {
            const ConeIndex k(kk, d);
            for (const auto& a : box) {
                for (const auto& b : box) {
                    bool expected = true;
                    for (int i = 0; i < d; ++i) {
                        const bool flip = ((kk - 1) >> i) & 1;
                        const Int diff = a[i] - b[i];
                        if (flip ? diff >= 0 : diff <= 0) {
                            expected = false;
                            break;
                        }
                    }
                    if (cone_greater(k, a, b) != expected) {
                        detail = "mismatch at d=" + std::to_string(d) +
                                 " k=" + std::to_string(kk) + " a=" + a.to_string() +
                                 " b=" + b.to_string();
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

// ---- criterion 2: classify_pair against the exhaustive finite oracle ----

bool criterion_oracle_equivalence(std::string& detail) {
    const AnalysisConfig cfg;
    std::mt19937_64 rng(20260814);
    for (int trial = 0; trial < 100; ++trial) {
        // Ground set Z_m x Z_n with both generators random translations: the
        // generators commute and their orders divide lcm(m, n) <= 6.
        const int m = 2 + static_cast<int>(rng() % 5);            // 2..6
        const int n = 1 + static_cast<int>(rng() % (8 / m));      // m*n <= 8
        const int size = m * n;
        std::vector<int> lab1(static_cast<std::size_t>(size)),
            lab2(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) {
            lab1[static_cast<std::size_t>(i)] = static_cast<int>(rng() % 2);
            lab2[static_cast<std::size_t>(i)] = static_cast<int>(rng() % 3);
        }
        // Random three-level ultrametric: nested labels always satisfy the axioms.
        std::vector<Rational> table;
        for (int i = 0; i < size; ++i) {
            for (int j = 0; j < size; ++j) {
                const auto si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j);
                if (i == j) {
                    table.push_back(Rational(0));
                } else if (lab1[si] != lab1[sj]) {
                    table.push_back(Rational(1));
                } else if (lab2[si] != lab2[sj]) {
                    table.push_back(make_rational(1, 2));
                } else {
                    table.push_back(make_rational(1, 5));
                }
            }
        }
        const auto translation = [&](int a, int b) {
            std::vector<int> img(static_cast<std::size_t>(size));
            for (int x = 0; x < m; ++x) {
                for (int y = 0; y < n; ++y) {
                    img[static_cast<std::size_t>(x * n + y)] =
                        ((x + a) % m) * n + (y + b) % n;
                }
            }
            return Permutation(std::move(img));
        };
        const auto sys = make_finite(
            FiniteSpace(size, std::move(table)),
            {translation(static_cast<int>(rng() % m), static_cast<int>(rng() % n)),
             translation(static_cast<int>(rng() % m), static_cast<int>(rng() % n))});
        for (int kk = 1; kk <= 4; ++kk) {
            const ConeIndex k(kk, 2);
            for (int i = 0; i < size; ++i) {
                for (int j = 0; j < size; ++j) {
                    const Point x = Point::finite(i), y = Point::finite(j);
                    const PairClass pc = classify_pair(*sys, x, y, k, cfg);
                    const OracleResult oc = brute_pair_classify_finite(*sys, x, y, k);
                    const std::string at = "trial " + std::to_string(trial) + " k=" +
                                           std::to_string(kk) + " pair (" + std::to_string(i) +
                                           "," + std::to_string(j) + ")";
                    if (pc.proximal.outcome != oc.proximal ||
                        pc.asymptotic.outcome != oc.asymptotic ||
                        pc.li_yorke.outcome != oc.li_yorke) {
                        detail = "outcome mismatch at " + at;
                        return false;
                    }
                    if (!pc.proximal.exact || !pc.asymptotic.exact || !pc.li_yorke.exact) {
                        detail = "non-exact finite verdict at " + at;
                        return false;
                    }
                    if (pc.liminf != oc.liminf || pc.limsup != oc.limsup) {
                        detail = "liminf/limsup mismatch at " + at;
                        return false;
                    }
                    if ((pc.proximal.outcome == Outcome::yes) != (i == j)) {
                        detail = "proximal pairs must be exactly the diagonal at " + at;
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

// ---- criterion 3: difference-set calculus against brute-force profiles ----

bool criterion_diffset_calculus(std::string& detail) {
    const AnalysisConfig cfg;
    const auto sys = make_shift(2, 2);
    const SymbolicConfig u = SymbolicConfig::uniform(2, 2, 0);
    const SymbolicConfig finite_diff = u.with_defect(lv({1, -2}), 1);
    const SymbolicConfig periodic_diff(2, {2, 2}, {1, 0, 0, 0});
    const SymbolicConfig block_diff = u.with_block(fam(lv({1, 1}), 2, 1));

    for (const auto* other : {&finite_diff, &periodic_diff, &block_diff}) {
        const DiffSet D = difference_set(u, *other);
        if (D.kind == DiffSet::Kind::opaque) {
            detail = "difference set unexpectedly opaque";
            return false;
        }
        const Point x = Point::config(u), y = Point::config(*other);
        for (int kk = 1; kk <= 4; ++kk) {
            const auto brute = brute_profile(*sys, x, y, ConeIndex(kk, 2), 12);
            for (const auto& e : brute) {
                if (!dist_equal(e.value, Dist::from_dyadic(diffset_profile_value(D, e.n)))) {
                    detail = "profile mismatch at n=" + e.n.to_string() +
                             " k=" + std::to_string(kk);
                    return false;
                }
            }
        }
    }

    const ConeIndex k1(1, 2);
    const PairClass fin = classify_pair(*sys, Point::config(u), Point::config(finite_diff), k1, cfg);
    if (fin.asymptotic.outcome != Outcome::yes || !fin.asymptotic.exact) {
        detail = "finite difference must be exactly asymptotic";
        return false;
    }
    const PairClass per =
        classify_pair(*sys, Point::config(u), Point::config(periodic_diff), k1, cfg);
    if (per.proximal.outcome != Outcome::no || !per.proximal.exact || !per.liminf ||
        *per.liminf != make_rational(1, 2)) {
        detail = "single-residue period-(2,2) difference must be distal with liminf 1/2";
        return false;
    }
    const PairClass blk = classify_pair(*sys, Point::config(u), Point::config(block_diff), k1, cfg);
    if (blk.li_yorke.outcome != Outcome::yes || !blk.li_yorke.exact) {
        detail = "block-line difference must be exactly Li-Yorke";
        return false;
    }
    return true;
}

// ---- criterion 4: sensitivity, equicontinuity, and the exclusion ----

bool criterion_sensitivity_dichotomy(std::string& detail) {
    const AnalysisConfig cfg;  // delta = 1/2, 20 samples
    const ConeIndex k1(1, 2);
    const auto shift2 = make_shift(2, 2);
    const auto rot2 = make_rotation_induced(kAlpha, LinearForm({Int(1), Int(1)}));

    const Verdict sv = sensitivity_check(*shift2, k1, cfg);
    if (sv.outcome != Outcome::yes || !sv.exact || sv.rule != "shift-flip" || !sv.witness) {
        detail = "shift sensitivity must be exact yes via shift-flip with a witness";
        return false;
    }
    // Constructive witness at every sampled config: the companion flipped at
    // cone time (10, 10) is 2^-10-close yet separates to distance 1 >= 1/2.
    const LatticeVector flip_cell = lv({10, 10});
    for (const Point& x : shift2->sample_points(cfg.sample_count, cfg.seed)) {
        const SymbolicConfig& c = x.as_config();
        const Point y = Point::config(c.with_defect(flip_cell, 1 - c.at(flip_cell)));
        const Dist close = shift2->dist(x, y);
        if (!close.exact || *close.exact != make_rational(1, 1024)) {
            detail = "flipped companion is not at distance 2^-10";
            return false;
        }
        const Dist far = shift2->dist(shift2->act(flip_cell, x), shift2->act(flip_cell, y));
        if (!far.exact || *far.exact < cfg.delta) {
            detail = "flip does not separate to delta at the cone time";
            return false;
        }
    }

    for (const Point& x : rot2->sample_points(cfg.sample_count, cfg.seed)) {
        const Verdict eq = equicontinuity_point_check(*rot2, x, cfg);
        if (eq.outcome != Outcome::yes || !eq.exact || eq.rule != "isometry") {
            detail = "rotation equicontinuity must be exact yes via the isometry rule";
            return false;
        }
    }
    const Verdict rs = sensitivity_check(*rot2, k1, cfg);
    if (rs.outcome != Outcome::no || !rs.exact) {
        detail = "rotation sensitivity must be exact no";
        return false;
    }

    // Exclusion over the battery: no system is sensitive and equicontinuous.
    std::vector<int> c5{1, 2, 3, 4, 0}, c52{2, 3, 4, 0, 1};
    const std::vector<SystemHandle> battery{
        shift2, rot2, make_finite(cycle_space(5), {Permutation(c5), Permutation(c52)}),
        make_product(shift2, rot2), make_induced(make_shift(1, 2), LinearForm({Int(2), Int(-1)}), 2)};
    for (const auto& sys : battery) {
        const DichotomyReport rep = dichotomy_report(*sys, k1, cfg);
        if (!rep.exclusion_ok) {
            detail = "exclusion violated for " + sys->name() + ": " + rep.summary;
            return false;
        }
        if (rep.sensitivity.outcome == Outcome::yes && rep.sensitivity.exact) {
            for (const auto& eq : rep.equicontinuity_samples) {
                if (eq.outcome == Outcome::yes && eq.exact) {
                    detail = "sensitive system with an exact equicontinuity point: " +
                             sys->name();
                    return false;
                }
            }
        }
    }
    for (const auto& c : dichotomy_suite(cfg)) {
        if (c.status != CaseStatus::confirmed) {
            detail = "dichotomy suite case not confirmed: " + c.id;
            return false;
        }
    }
    return true;
}

// ---- criterion 5: symbol-swap conjugacy invariance ----

bool criterion_conjugacy(std::string& detail) {
    const AnalysisConfig cfg;
    const ConeIndex k1(1, 2);
    const auto shift2 = make_shift(2, 2);

    const auto samples = shift2->sample_points(50, cfg.seed);
    if (samples.size() != 50) {
        detail = "expected 50 sampled configurations";
        return false;
    }
    for (const Point& x : samples) {
        for (int i = 0; i < 2; ++i) {
            std::vector<Int> e(2, Int(0));
            e[static_cast<std::size_t>(i)] = Int(1);
            const LatticeVector gen{std::move(e)};
            if (!point_equal(symbol_swap(shift2->act(gen, x)),
                             shift2->act(gen, symbol_swap(x)))) {
                detail = "generator identity fails on a sampled configuration";
                return false;
            }
        }
    }

    for (const auto& [cx, cy] : shift_pairs_2d()) {
        const Point x = Point::config(cx), y = Point::config(cy);
        const PairClass ca = classify_pair(*shift2, x, y, k1, cfg);
        const PairClass cb = classify_pair(*shift2, symbol_swap(x), symbol_swap(y), k1, cfg);
        if (!classifications_exactly_equal(ca, cb, detail)) {
            detail = "conjugacy pair battery: " + detail;
            return false;
        }
    }
    return true;
}

// ---- criterion 6: product propagation ----

bool criterion_product(std::string& detail) {
    const AnalysisConfig cfg;
    const ConeIndex k1(1, 2);
    const auto shift2 = make_shift(2, 2);
    const auto rot2 = make_rotation_induced(kAlpha, LinearForm({Int(1), Int(1)}));
    const auto prod = make_product(shift2, rot2);

    const Verdict sv = sensitivity_check(*prod, k1, cfg);
    if (sv.outcome != Outcome::yes || sv.rule != "product-transport" || !sv.witness) {
        detail = "product sensitivity must transport witnesses from the shift factor";
        return false;
    }

    const Point frozen = rot2->sample_points(1, cfg.seed + 1).front();
    for (const auto& [cx, cy] : shift_pairs_2d()) {
        const Point x = Point::config(cx), y = Point::config(cy);
        const PairClass ca = classify_pair(*shift2, x, y, k1, cfg);
        const PairClass cp = classify_pair(*prod, Point::product(x, frozen),
                                           Point::product(y, frozen), k1, cfg);
        if (!classifications_exactly_equal(ca, cp, detail)) {
            detail = "embedded pair battery: " + detail;
            return false;
        }
    }
    return true;
}

// ---- criterion 7: induced-action transfers ----

bool criterion_induced(std::string& detail) {
    const AnalysisConfig cfg;
    const ConeIndex k1(1, 2);
    const auto shift1 = make_shift(1, 2);

    const ConeUnitSearch unit = solve_cone_unit(LinearForm({Int(2), Int(-1)}), k1, 10);
    if (!unit.solution || *unit.solution != lv({1, 1})) {
        detail = "cone unit for h=(2,-1), k=1 must be (1,1)";
        return false;
    }

    const auto cases = induced_suite(shift1, LinearForm({Int(2), Int(-1)}), k1, cfg);
    for (const char* suffix :
         {"/sensitivity-transfer", "/transitivity-transfer", "/periodic-point",
          "/asymptotic-pair", "/li-yorke-pair"}) {
        const TheoremCase* c = find_case(cases, suffix);
        if (!c) {
            detail = std::string("missing case ") + suffix;
            return false;
        }
        if (c->status != CaseStatus::confirmed) {
            detail = c->id + " must be confirmed, got " + case_status_name(c->status);
            return false;
        }
    }
    const TheoremCase* pp = find_case(cases, "/periodic-point");
    bool witness_22 = false;
    for (const auto& [label, v] : pp->conclusions) {
        if (!v.witness) continue;
        for (const auto& w : v.witness->lattice_points) {
            if (w == lv({2, 2})) witness_22 = true;
        }
    }
    if (!witness_22) {
        detail = "periodic-point case must carry the cone-time witness (2,2)";
        return false;
    }

    const ConeUnitSearch absent = solve_cone_unit(LinearForm({Int(1), Int(1)}), k1, 10);
    if (absent.solution || absent.searched_bound != 10) {
        detail = "h=(1,1), k=1 must report no cone unit within bound 10";
        return false;
    }
    const auto blocked = induced_suite(shift1, LinearForm({Int(1), Int(1)}), k1, cfg);
    for (const auto& c : blocked) {
        if (c.status == CaseStatus::refuted) {
            detail = "case refuted under a missing hypothesis: " + c.id;
            return false;
        }
        for (const auto& [label, v] : c.hypotheses) {
            if (label == "a cone unit exists" && c.status != CaseStatus::inconclusive) {
                detail = "unit-dependent case must be inconclusive: " + c.id;
                return false;
            }
        }
    }
    return true;
}

// ---- criterion 8: the d=1 reduction against the classical reference ----

bool criterion_classical_reduction(std::string& detail) {
    const AnalysisConfig cfg;
    const ConeIndex k1(1, 1);
    const auto ind1 = make_induced(make_shift(1, 2), LinearForm({Int(1)}), 1);
    const SymbolicConfig u = SymbolicConfig::uniform(1, 2, 0);

    std::vector<std::pair<SymbolicConfig, SymbolicConfig>> battery;
    battery.emplace_back(u, u);
    battery.emplace_back(u, u.with_defect(lv({5}), 1));
    battery.emplace_back(u, u.with_defect(lv({5}), 1).with_defect(lv({-3}), 1));
    battery.emplace_back(u, SymbolicConfig(2, {2}, {0, 1}));
    battery.emplace_back(u, SymbolicConfig(2, {3}, {1, 0, 0}));
    battery.emplace_back(u, u.with_block(fam(lv({1}), 2, 1)));
    battery.emplace_back(u, u.with_block(fam(lv({1}), 4, 1)));
    battery.emplace_back(u, u.with_block(fam(lv({-1}), 2, 1)));
    battery.emplace_back(u, u.with_block(fam(lv({2}), 3, 1)));
    battery.emplace_back(SymbolicConfig(2, {2}, {0, 1}), SymbolicConfig(2, {2}, {1, 0}));
    if (battery.size() != 10) {
        detail = "expected 10 canonical pairs";
        return false;
    }

    for (std::size_t i = 0; i < battery.size(); ++i) {
        const auto& [cx, cy] = battery[i];
        const ClassicalPairClass classical = classical_classify(cx, cy);
        const PairClass pc =
            classify_pair(*ind1, Point::config(cx), Point::config(cy), k1, cfg);
        const std::string at = " (pair " + std::to_string(i) + ")";
        if (pc.proximal.outcome != classical.proximal ||
            pc.asymptotic.outcome != classical.asymptotic ||
            pc.li_yorke.outcome != classical.li_yorke) {
            detail = "outcome mismatch with the classical reference" + at;
            return false;
        }
        if (!pc.proximal.exact || !pc.asymptotic.exact || !pc.li_yorke.exact) {
            detail = "non-exact verdict on a canonical pair" + at;
            return false;
        }
        if (pc.liminf != classical.liminf || pc.limsup != classical.limsup) {
            detail = "liminf/limsup mismatch with the classical reference" + at;
            return false;
        }
    }
    return true;
}

// ---- criterion 9: byte-identical reports across thread counts ----

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

bool criterion_determinism(std::string& detail) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "ktc_acceptance";
    fs::create_directories(dir);
    const fs::path one = dir / "battery_threads1.json";
    const fs::path four = dir / "battery_threads4.json";
    const auto run = [&](const char* env, const fs::path& out) {
        const std::string cmd = std::string(env) + " \"" KTC_CLI_PATH
                                "\" theorems --suite standard --seed 1 --out \"" +
                                out.string() + "\"";
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) && WEXITSTATUS(status) == 0;
    };
    if (!run("OMP_NUM_THREADS=1", one) || !run("OMP_NUM_THREADS=4", four)) {
        detail = "battery run failed";
        return false;
    }
    const std::string a = slurp(one), b = slurp(four);
    if (a.empty()) {
        detail = "battery report is empty";
        return false;
    }
    if (a != b) {
        detail = "reports differ between thread counts";
        return false;
    }
    return true;
}

}  // namespace

int main() {
    struct Criterion {
        const char* text;
        bool (*check)(std::string&);
    };
    const Criterion criteria[] = {
        {"1. cone order matches an independent sign-formula check (d=1..3, all cones,"
         " box [-3,3]^d)",
         criterion_cone_order},
        {"2. finite-system pair classification equals the exhaustive oracle"
         " (100 random systems, all cones, proximal = diagonal)",
         criterion_oracle_equivalence},
        {"3. difference-set profiles equal brute force on cone shells (radius 12, all cones)"
         " with the canonical classifications",
         criterion_diffset_calculus},
        {"4. shift sensitive (delta 1/2, witnesses at 20 samples), rotation equicontinuous,"
         " exclusion holds with zero violations",
         criterion_sensitivity_dichotomy},
        {"5. symbol-swap conjugacy: generator identity exact on 50 samples, classifications"
         " equal exactly on a 10-pair battery",
         criterion_conjugacy},
        {"6. product: sensitivity transports from the shift factor, embedded pairs classify"
         " exactly as the factor",
         criterion_product},
        {"7. induced transfers: h=(2,-1) unit (1,1) with confirmed transfers; h=(1,1) absence"
         " in bound 10, inconclusive never refuted",
         criterion_induced},
        {"8. d=1 induced-from-shift classification matches the classical reference on"
         " 10 canonical pairs",
         criterion_classical_reduction},
        {"9. full battery reports byte-identical across thread counts for the same seed",
         criterion_determinism},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        std::string detail;
        const bool ok = c.check(detail);
        std::printf("%s %s\n", ok ? "PASS" : "FAIL", c.text);
        std::fflush(stdout);
        if (!ok) {
            ++failures;
            std::fprintf(stderr, "  detail: %s\n", detail.c_str());
        }
    }
    if (failures == 0) {
        std::printf("acceptance: all 9 criteria pass\n");
        return 0;
    }
    std::printf("acceptance: %d of 9 criteria FAILED\n", failures);
    return 1;
}
