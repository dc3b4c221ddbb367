#include "ktc/harness.hpp"

#include "ktc/classical.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ktc {

namespace {

constexpr int kIdentitySamples = 50;
constexpr int kUnitBound = 10;

LatticeVector axis_vec(int dim, int axis) {
    std::vector<Int> c(static_cast<std::size_t>(dim), Int(0));
    c[static_cast<std::size_t>(axis)] = Int(1);
    return LatticeVector{std::move(c)};
}

LatticeVector diag_vec(int dim, long long t) {
    std::vector<Int> c(static_cast<std::size_t>(dim), Int(t));
    return LatticeVector{std::move(c)};
}

Witness note_witness(std::string notes, std::vector<LatticeVector> pts = {}) {
    Witness w;
    w.lattice_points = std::move(pts);
    w.notes = std::move(notes);
    return w;
}

/// Same claim with Yes and No exchanged; rule, exactness and witness carry
/// over unchanged.
Verdict negation(Verdict v) {
    if (v.outcome == Outcome::yes) {
        v.outcome = Outcome::no;
    } else if (v.outcome == Outcome::no) {
        v.outcome = Outcome::yes;
    }
    return v;
}

/// Yes iff the two verdicts cannot disagree: an undecided side matches
/// anything, decided sides must coincide. Exact only when both sides are
/// exact, so an evidence-level mismatch can never refute a case.
Verdict equality_verdict(const Verdict& lhs, const Verdict& rhs) {
    std::ostringstream os;
    os << outcome_name(lhs.outcome) << " (" << (lhs.rule.empty() ? "-" : lhs.rule) << ") vs "
       << outcome_name(rhs.outcome) << " (" << (rhs.rule.empty() ? "-" : rhs.rule) << ")";
    if (!lhs.decided() || !rhs.decided()) {
        Verdict v = Verdict::yes("verdict-match", false, note_witness(os.str()));
        return v;
    }
    const bool same = lhs.outcome == rhs.outcome;
    const bool exact = lhs.exact && rhs.exact;
    return same ? Verdict::yes("verdict-match", exact, note_witness(os.str()))
                : Verdict::no("verdict-match", exact, note_witness(os.str()));
}

/// Conjunction of verdicts: No dominates, then Unknown, then Yes; exact only
/// when every conjunct is exact.
Verdict conjunction(const std::vector<Verdict>& vs, const std::string& rule) {
    bool all_exact = true;
    bool any_unknown = false;
    for (const auto& v : vs) {
        if (v.outcome == Outcome::no) return Verdict::no(rule, v.exact, v.witness);
        if (v.outcome == Outcome::unknown) any_unknown = true;
        all_exact = all_exact && v.exact;
    }
    if (any_unknown || vs.empty()) return Verdict::unknown(rule, 0);
    return Verdict::yes(rule, all_exact);
}

void finalize(TheoremCase& tc) {
    bool hyp_all_yes = true;
    bool hyp_all_exact_yes = true;
    std::string blocker;
    for (const auto& [label, v] : tc.hypotheses) {
        if (v.outcome != Outcome::yes) {
            hyp_all_yes = false;
            if (blocker.empty()) blocker = "hypothesis not established: " + label;
        }
        if (!(v.outcome == Outcome::yes && v.exact)) hyp_all_exact_yes = false;
    }
    bool concl_all_yes = true;
    bool concl_exact_no = false;
    for (const auto& [label, v] : tc.conclusions) {
        if (v.outcome != Outcome::yes) {
            concl_all_yes = false;
            if (blocker.empty()) blocker = "conclusion not established: " + label;
        }
        if (v.outcome == Outcome::no && v.exact) concl_exact_no = true;
    }
    if (hyp_all_exact_yes && concl_exact_no) {
        tc.status = CaseStatus::refuted;
    } else if (hyp_all_yes && concl_all_yes) {
        tc.status = CaseStatus::confirmed;
    } else {
        tc.status = CaseStatus::inconclusive;
        if (!blocker.empty()) {
            tc.note = tc.note.empty() ? blocker : tc.note + "; " + blocker;
        }
    }
}

TheoremCase make_case(std::string id, std::string statement, std::string instance,
                      std::vector<std::pair<std::string, Verdict>> hypotheses,
                      std::vector<std::pair<std::string, Verdict>> conclusions,
                      std::string note = {}) {
    TheoremCase tc;
    tc.id = std::move(id);
    tc.statement = std::move(statement);
    tc.instance = std::move(instance);
    tc.hypotheses = std::move(hypotheses);
    tc.conclusions = std::move(conclusions);
    tc.note = std::move(note);
    finalize(tc);
    return tc;
}

/// Equality of the full classification of one pair computed in two systems:
/// the three headline verdicts plus the epsilon grid.
std::vector<std::pair<std::string, Verdict>> classification_match(const PairClass& ca,
                                                                  const PairClass& cb) {
    std::vector<std::pair<std::string, Verdict>> out;
    out.emplace_back("proximal verdicts agree", equality_verdict(ca.proximal, cb.proximal));
    out.emplace_back("asymptotic verdicts agree", equality_verdict(ca.asymptotic, cb.asymptotic));
    out.emplace_back("Li-Yorke verdicts agree", equality_verdict(ca.li_yorke, cb.li_yorke));
    std::vector<Verdict> grid;
    for (std::size_t i = 0; i < ca.asymptotic_at.size() && i < cb.asymptotic_at.size(); ++i) {
        grid.push_back(
            equality_verdict(ca.asymptotic_at[i].second, cb.asymptotic_at[i].second));
    }
    out.emplace_back("epsilon-grid verdicts agree", conjunction(grid, "grid-match"));
    return out;
}

std::string pair_label(const Point& x, const Point& y) {
    return x.to_string() + "  ~  " + y.to_string();
}

BlockFamily diag_block(int dim, long long base, int symbol, int flip_first) {
    BlockFamily f;
    std::vector<Int> c(static_cast<std::size_t>(dim), Int(1));
    if (flip_first) c[0] = Int(-1);
    f.direction = LatticeVector{std::move(c)};
    f.base = Int(base);
    f.symbol = symbol;
    f.offset = LatticeVector::zero(dim);
    return f;
}

/// Ten structurally diverse configuration pairs covering the closed-form
/// difference-set shapes: finite, periodic, block-line in and out of cone 1.
std::vector<std::pair<Point, Point>> shift_pair_battery(int dim, int alphabet) {
    const auto u = SymbolicConfig::uniform(dim, alphabet, 0);
    std::vector<int> stripe_period(static_cast<std::size_t>(dim), 1);
    stripe_period[0] = 2;
    const SymbolicConfig stripes(alphabet, stripe_period, {0, 1});
    const SymbolicConfig stripes_flipped(alphabet, stripe_period, {1, 0});

    std::vector<std::pair<Point, Point>> pairs;
    auto add = [&](SymbolicConfig x, SymbolicConfig y) {
        pairs.emplace_back(Point::config(std::move(x)), Point::config(std::move(y)));
    };
    add(u, u.with_defect(diag_vec(dim, 2), 1));
    add(u, u.with_defect(diag_vec(dim, 2), 1).with_defect(diag_vec(dim, -3), 1));
    add(u, u.with_block(diag_block(dim, 2, 1, 0)));
    add(u, u.with_block(diag_block(dim, 3, 1, 0)));
    add(u, u.with_block(diag_block(dim, 2, 1, 1)));
    add(u, stripes);
    add(u, u.with_defect(axis_vec(dim, 0) * Int(5), 1));
    add(u.with_defect(diag_vec(dim, 1), 1), u.with_defect(diag_vec(dim, -1), 1));
    add(stripes, stripes_flipped);
    add(u.with_defect(diag_vec(dim, 2), 1), u.with_block(diag_block(dim, 2, 1, 0)));
    return pairs;
}

std::vector<std::pair<Point, Point>> generic_pair_battery(const System& sys,
                                                          const AnalysisConfig& cfg) {
    const auto samples = sys.sample_points(5, cfg.seed);
    std::vector<std::pair<Point, Point>> pairs;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        for (std::size_t j = i + 1; j < samples.size(); ++j) {
            pairs.emplace_back(samples[i], samples[j]);
        }
    }
    return pairs;
}

Verdict outcome_verdict(Outcome o, const std::string& rule, std::string notes) {
    Verdict v;
    v.outcome = o;
    v.rule = rule;
    v.exact = o != Outcome::unknown;
    v.witness = note_witness(std::move(notes));
    return v;
}

}  // namespace

const char* case_status_name(CaseStatus s) {
    switch (s) {
        case CaseStatus::confirmed: return "confirmed";
        case CaseStatus::refuted: return "refuted";
        case CaseStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

std::vector<TheoremCase> conjugacy_suite(const SystemHandle& a, const SystemHandle& b,
                                         const PointMap& forward, const PointMap& backward,
                                         const ConeIndex& k, const AnalysisConfig& cfg) {
    cfg.validate();
    if (!a || !b) throw std::invalid_argument("conjugacy_suite: null system");
    if (a->dimension() != b->dimension() || k.dim != a->dimension()) {
        throw std::invalid_argument("conjugacy_suite: dimension mismatch");
    }
    const std::string tag = "conjugacy(" + a->name() + " -> " + b->name() + ")";
    const int d = a->dimension();

    // The identity case: backward inverts forward and forward intertwines the
    // generators, checked exactly on deterministic samples.
    const auto samples = a->sample_points(kIdentitySamples, cfg.seed);
    for (const Point& x : samples) {
        if (!point_equal(backward(forward(x)), x)) {
            throw std::invalid_argument("conjugacy_suite: backward(forward(x)) != x on a sample");
        }
        for (int i = 0; i < d; ++i) {
            const LatticeVector e = axis_vec(d, i);
            if (!point_equal(forward(a->act(e, x)), b->act(e, forward(x)))) {
                throw std::invalid_argument(
                    "conjugacy_suite: generator identity fails on a sample");
            }
        }
    }
    std::vector<TheoremCase> cases;
    {
        std::ostringstream os;
        os << "mutual inverse and generator commutation hold on " << samples.size()
           << " sampled points";
        cases.push_back(make_case(
            tag + "/generator-identity",
            "the map is invertible and intertwines the two actions", tag, {},
            {{"identity on samples",
              Verdict::yes("sampled-identity", false, note_witness(os.str()))}}));
    }

    // Pair battery: classification is invariant under the conjugacy.
    const auto pairs = a->kind() == SystemKind::shift
                           ? shift_pair_battery(d, std::max(2, a->alphabet()))
                           : generic_pair_battery(*a, cfg);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& [x, y] = pairs[i];
        const PairClass ca = classify_pair(*a, x, y, k, cfg);
        const PairClass cb = classify_pair(*b, forward(x), forward(y), k, cfg);
        cases.push_back(make_case(
            tag + "/pair-transfer/" + std::to_string(i),
            "a conjugacy preserves the cone classification of every pair",
            pair_label(x, y), {}, classification_match(ca, cb)));
    }

    // System-level invariance.
    cases.push_back(make_case(
        tag + "/sensitivity-invariance",
        "a conjugacy preserves cone sensitivity", tag, {},
        {{"sensitivity verdicts agree",
          equality_verdict(sensitivity_check(*a, k, cfg), sensitivity_check(*b, k, cfg))}}));
    cases.push_back(make_case(
        tag + "/li-yorke-sensitivity-invariance",
        "a conjugacy preserves cone Li-Yorke sensitivity", tag, {},
        {{"Li-Yorke sensitivity verdicts agree",
          equality_verdict(li_yorke_sensitivity_check(*a, k, cfg),
                           li_yorke_sensitivity_check(*b, k, cfg))}}));
    {
        std::vector<Verdict> eqs;
        for (int i = 0; i < 5 && i < static_cast<int>(samples.size()); ++i) {
            eqs.push_back(equality_verdict(
                equicontinuity_point_check(*a, samples[static_cast<std::size_t>(i)], cfg),
                equicontinuity_point_check(*b, forward(samples[static_cast<std::size_t>(i)]),
                                           cfg)));
        }
        cases.push_back(make_case(
            tag + "/equicontinuity-invariance",
            "a conjugacy maps equicontinuity points to equicontinuity points", tag, {},
            {{"pointwise equicontinuity verdicts agree", conjunction(eqs, "sample-match")}}));
    }
    return cases;
}

std::vector<TheoremCase> product_suite(const SystemHandle& a, const SystemHandle& b,
                                       const ConeIndex& k, const AnalysisConfig& cfg) {
    cfg.validate();
    if (!a || !b) throw std::invalid_argument("product_suite: null system");
    const SystemHandle prod = make_product(a, b);
    if (k.dim != prod->dimension()) {
        throw std::invalid_argument("product_suite: cone dimension mismatch");
    }
    const std::string tag = "product(" + a->name() + " x " + b->name() + ")";
    std::vector<TheoremCase> cases;

    const Verdict sens_a = sensitivity_check(*a, k, cfg);
    const Verdict sens_b = sensitivity_check(*b, k, cfg);
    const Verdict sens_p = sensitivity_check(*prod, k, cfg);
    cases.push_back(make_case(
        tag + "/sensitivity-transport",
        "a sensitive factor makes the product sensitive at the same threshold "
        "(witness pairs transport under the sup metric)",
        tag, {{"the first factor is sensitive", sens_a}},
        {{"the product is sensitive", sens_p}}));

    cases.push_back(make_case(
        tag + "/li-yorke-sensitivity-transport",
        "a Li-Yorke sensitive factor makes the product Li-Yorke sensitive", tag,
        {{"the first factor is Li-Yorke sensitive", li_yorke_sensitivity_check(*a, k, cfg)}},
        {{"the product is Li-Yorke sensitive", li_yorke_sensitivity_check(*prod, k, cfg)}}));

    cases.push_back(make_case(
        tag + "/non-sensitivity-composition",
        "a product of two non-sensitive systems is not sensitive", tag,
        {{"the first factor is not sensitive", negation(sens_a)},
         {"the second factor is not sensitive", negation(sens_b)}},
        {{"the product is not sensitive", negation(sens_p)}}));

    // Embedding a pair with a frozen second coordinate: under the sup metric
    // the product orbit distances equal the first-factor orbit distances, so
    // the classification is literally the same.
    const auto first_samples = a->sample_points(8, cfg.seed);
    std::size_t other = 0;
    for (std::size_t j = 1; j < first_samples.size(); ++j) {
        if (!point_equal(first_samples[0], first_samples[j])) {
            other = j;
            break;
        }
    }
    if (other == 0) {
        cases.push_back(make_case(tag + "/embedded-pair",
                                  "freezing one coordinate embeds a factor pair isometrically",
                                  tag, {},
                                  {{"distinct sample pair available",
                                    Verdict::unknown("sampling", 0)}},
                                  "sampling produced no distinct pair in the first factor"));
    } else {
        const Point y = b->sample_points(1, cfg.seed + 1).front();
        const Point x1 = first_samples[0];
        const Point x2 = first_samples[other];
        const PairClass ca = classify_pair(*a, x1, x2, k, cfg);
        const PairClass cp = classify_pair(*prod, Point::product(x1, y), Point::product(x2, y),
                                           k, cfg);
        auto conclusions = classification_match(ca, cp);
        const bool bands_equal = ca.liminf == cp.liminf && ca.limsup == cp.limsup;
        const bool bands_present = ca.liminf.has_value() && ca.limsup.has_value();
        conclusions.emplace_back(
            "liminf and limsup agree",
            bands_equal ? Verdict::yes("band-match", bands_present)
                        : Verdict::no("band-match", false,
                                      note_witness("closed-form bands differ")));
        cases.push_back(make_case(tag + "/embedded-pair",
                                  "freezing one coordinate embeds a factor pair isometrically",
                                  pair_label(x1, x2) + "  at fixed " + y.to_string(), {},
                                  std::move(conclusions)));
    }
    return cases;
}

std::vector<TheoremCase> induced_suite(const SystemHandle& base, const LinearForm& h,
                                       const ConeIndex& k, const AnalysisConfig& cfg) {
    cfg.validate();
    if (!base) throw std::invalid_argument("induced_suite: null system");
    if (base->dimension() != 1) {
        throw std::invalid_argument("induced_suite: base must be a dimension-1 action");
    }
    if (h.dim() != k.dim) throw std::invalid_argument("induced_suite: cone dimension mismatch");
    const SystemHandle ind = make_induced(base, h, h.dim());
    const std::string tag = "induced(" + base->name() + ", h=" + h.to_string() + ")";
    const ConeIndex k1d(1, 1);

    // The transfer statements need a cone unit: some m above 0 in the k-cone
    // with r(m) = 1, so that integer powers of the base map are realized at
    // cone times.
    const ConeUnitSearch unit = solve_cone_unit(h, k, kUnitBound);
    Verdict unit_v;
    if (unit.solution) {
        unit_v = Verdict::yes("cone-unit", true,
                              note_witness("r(m) = 1 with m in the cone", {*unit.solution}));
    } else {
        unit_v = Verdict::unknown("cone-unit", unit.searched_bound);
        unit_v.witness = note_witness("no m with r(m)=1 in bound " +
                                      std::to_string(unit.searched_bound));
    }
    const std::pair<std::string, Verdict> unit_hyp{"a cone unit exists", unit_v};

    const bool over_shift = base->kind() == SystemKind::shift;
    const Verdict base_sens = over_shift ? classical_shift_sensitivity()
                                         : sensitivity_check(*base, k1d, cfg);
    const Verdict base_trans = over_shift ? classical_shift_transitivity()
                                          : transitivity_check(*base, k1d, cfg);
    const Verdict base_lys = over_shift ? classical_shift_li_yorke_sensitivity()
                                        : li_yorke_sensitivity_check(*base, k1d, cfg);

    std::vector<TheoremCase> cases;
    cases.push_back(make_case(
        tag + "/sensitivity-transfer",
        "if the base map is sensitive, the induced action is cone sensitive", tag,
        {unit_hyp, {"the base map is sensitive", base_sens}},
        {{"the induced action is sensitive", sensitivity_check(*ind, k, cfg)}}));

    cases.push_back(make_case(
        tag + "/transitivity-transfer",
        "if the base map is transitive, the induced action is cone transitive", tag,
        {unit_hyp, {"the base map is transitive", base_trans}},
        {{"the induced action is transitive", transitivity_check(*ind, k, cfg)}}));

    cases.push_back(make_case(
        tag + "/li-yorke-sensitivity-transfer",
        "if the base map is Li-Yorke sensitive, the induced action is cone Li-Yorke sensitive",
        tag, {unit_hyp, {"the base map is Li-Yorke sensitive", base_lys}},
        {{"the induced action is Li-Yorke sensitive",
          li_yorke_sensitivity_check(*ind, k, cfg)}}));

    cases.push_back(make_case(
        tag + "/chaos-corollary",
        "transitivity plus sensitivity of the base map transfer jointly, so chaos in the "
        "sense of transitive-and-sensitive transfers",
        tag,
        {unit_hyp,
         {"the base map is transitive", base_trans},
         {"the base map is sensitive", base_sens}},
        {{"the induced action is transitive", transitivity_check(*ind, k, cfg)},
         {"the induced action is sensitive", sensitivity_check(*ind, k, cfg)}}));

    if (over_shift) {
        const int q = std::max(2, base->alphabet());
        const auto u = SymbolicConfig::uniform(1, q, 0);
        const Point pu = Point::config(u);

        // Periodic point: a base point of orbit period p is fixed by the
        // induced action at the cone time realizing r = p.
        {
            const SymbolicConfig stripes(q, {2}, {0, 1});
            const Point ps = Point::config(stripes);
            const bool period2 = point_equal(base->act(diag_vec(1, 2), ps), ps) &&
                                 !point_equal(base->act(diag_vec(1, 1), ps), ps);
            std::pair<std::string, Verdict> period_hyp{
                "the base point has orbit period 2",
                outcome_verdict(period2 ? Outcome::yes : Outcome::no, "orbit-check",
                                "checked by applying the base map twice")};
            std::vector<std::pair<std::string, Verdict>> concl;
            if (unit.solution) {
                const LatticeVector n = scale_cone_unit(*unit.solution, Int(2), h);
                const bool fixed = point_equal(ind->act(n, ps), ps);
                concl.emplace_back(
                    "the induced action fixes the point at a cone time",
                    outcome_verdict(fixed ? Outcome::yes : Outcome::no, "orbit-period",
                                    "cone time scaled from the unit")
                );
                concl.back().second.witness->lattice_points.push_back(n);
            } else {
                concl.emplace_back("the induced action fixes the point at a cone time",
                                   Verdict::unknown("cone-unit", unit.searched_bound));
            }
            cases.push_back(make_case(
                tag + "/periodic-point", "a periodic base point is cone periodic",
                ps.to_string(), {unit_hyp, period_hyp}, std::move(concl)));
        }

        // Pair transfers, with base-side facts computed on the classical
        // forward-tail reference path.
        const SymbolicConfig defect = u.with_defect(diag_vec(1, 5), 1);
        const SymbolicConfig stripes(q, {2}, {0, 1});
        const SymbolicConfig block = u.with_block(diag_block(1, 2, 1, 0));

        {
            const auto classical = classical_classify(u, defect);
            const PairClass pc = classify_pair(*ind, pu, Point::config(defect), k, cfg);
            cases.push_back(make_case(
                tag + "/asymptotic-pair",
                "a pair asymptotic under the base map is proximal in the induced action",
                pair_label(pu, Point::config(defect)),
                {unit_hyp,
                 {"the pair is asymptotic under the base map",
                  outcome_verdict(classical.asymptotic, "classical-reference",
                                  "forward-tail inspection")}},
                {{"the pair is proximal in the induced action", pc.proximal}}));
        }
        {
            const auto classical = classical_classify(u, stripes);
            const bool separated = classical.liminf.has_value() && *classical.liminf > Rational(0);
            const PairClass pc = classify_pair(*ind, pu, Point::config(stripes), k, cfg);
            cases.push_back(make_case(
                tag + "/nonasymptotic-pair",
                "a pair with orbit distances bounded away from zero under the base map is "
                "not asymptotic in the induced action",
                pair_label(pu, Point::config(stripes)),
                {unit_hyp,
                 {"the base orbit distances have positive liminf",
                  outcome_verdict(separated ? Outcome::yes : Outcome::no,
                                  "classical-reference", "forward-tail inspection")}},
                {{"the pair is not asymptotic in the induced action",
                  negation(pc.asymptotic)}}));
        }
        {
            const auto classical = classical_classify(u, block);
            const PairClass pc = classify_pair(*ind, pu, Point::config(block), k, cfg);
            cases.push_back(make_case(
                tag + "/li-yorke-pair",
                "a pair Li-Yorke under the base map is Li-Yorke in the induced action",
                pair_label(pu, Point::config(block)),
                {unit_hyp,
                 {"the pair is Li-Yorke under the base map",
                  outcome_verdict(classical.li_yorke, "classical-reference",
                                  "forward-tail inspection")}},
                {{"the pair is Li-Yorke in the induced action", pc.li_yorke}}));
        }

        // Converse direction: an exactly asymptotic pair of the induced
        // action must be asymptotic under the base map.
        {
            const std::vector<SymbolicConfig> battery{defect, stripes, block};
            std::optional<SymbolicConfig> found;
            for (const auto& cand : battery) {
                const PairClass pc = classify_pair(*ind, pu, Point::config(cand), k, cfg);
                if (pc.asymptotic.outcome == Outcome::yes && pc.asymptotic.exact) {
                    found = cand;
                    break;
                }
            }
            std::vector<std::pair<std::string, Verdict>> hyps{unit_hyp};
            std::vector<std::pair<std::string, Verdict>> concl;
            std::string note;
            if (found) {
                hyps.emplace_back(
                    "some battery pair is exactly asymptotic in the induced action",
                    Verdict::yes("battery-scan", true,
                                 note_witness(Point::config(*found).to_string())));
                const auto classical = classical_classify(u, *found);
                concl.emplace_back("that pair is asymptotic under the base map",
                                   outcome_verdict(classical.asymptotic, "classical-reference",
                                                   "forward-tail inspection"));
            } else {
                hyps.emplace_back(
                    "some battery pair is exactly asymptotic in the induced action",
                    Verdict::unknown("battery-scan", 0));
                concl.emplace_back("that pair is asymptotic under the base map",
                                   Verdict::unknown("battery-scan", 0));
                note = "no exactly asymptotic distinct pair arises in this battery";
            }
            cases.push_back(make_case(
                tag + "/asymptotic-converse",
                "a pair exactly asymptotic in the induced action is asymptotic under the "
                "base map",
                tag, std::move(hyps), std::move(concl), std::move(note)));
        }
    }

    if (base->flags().is_isometric) {
        const auto samples = base->sample_points(cfg.sample_count, cfg.seed);
        std::vector<Verdict> base_eq, ind_eq;
        for (const Point& x : samples) {
            base_eq.push_back(equicontinuity_point_check(*base, x, cfg));
            ind_eq.push_back(equicontinuity_point_check(*ind, x, cfg));
        }
        cases.push_back(make_case(
            tag + "/equicontinuity-transfer",
            "an equicontinuous base map induces an equicontinuous action", tag,
            {{"the base map is equicontinuous at sampled points",
              conjunction(base_eq, "sample-conjunction")}},
            {{"the induced action is equicontinuous at the same points",
              conjunction(ind_eq, "sample-conjunction")}}));
    }
    return cases;
}

std::vector<TheoremCase> dichotomy_suite(const AnalysisConfig& cfg) {
    cfg.validate();
    std::vector<TheoremCase> cases;

    struct Entry {
        std::string name;
        SystemHandle sys;
        ConeIndex k;
    };
    std::vector<Entry> battery;
    battery.push_back({"full shift d=2", make_shift(2, 2), ConeIndex(1, 2)});
    battery.push_back({"golden-mean rotation", // irrational rotation, d=1
                       make_rotation_induced(0.6180339887498949, LinearForm({Int(1)})),
                       ConeIndex(1, 1)});
    battery.push_back({"five-cycle pair action",
                       make_finite(
                           FiniteSpace(5,
                                       [] {
                                           std::vector<Rational> t;
                                           for (int i = 0; i < 5; ++i) {
                                               for (int j = 0; j < 5; ++j) {
                                                   const int raw = i > j ? i - j : j - i;
                                                   t.push_back(make_rational(
                                                       raw < 5 - raw ? raw : 5 - raw, 5));
                                               }
                                           }
                                           return t;
                                       }()),
                           {Permutation({1, 2, 3, 4, 0}), Permutation({2, 3, 4, 0, 1})}),
                       ConeIndex(1, 2)});

    for (std::size_t i = 0; i < battery.size(); ++i) {
        const auto& e = battery[i];
        const DichotomyReport rep = dichotomy_report(*e.sys, e.k, cfg);
        Verdict excl = rep.exclusion_ok
                           ? Verdict::yes("exclusion", true, note_witness(rep.summary))
                           : Verdict::no("exclusion", true, note_witness(rep.summary));
        cases.push_back(make_case(
            "dichotomy/exclusion/" + std::to_string(i),
            "no system is exactly sensitive and exactly equicontinuous at a point", e.name,
            {}, {{"sensitivity excludes sampled equicontinuity", excl}}, rep.summary));
    }

    // On a finite system the equicontinuity set is computable exhaustively
    // and must equal every G_l section down to the metric resolution.
    {
        std::vector<Rational> t;
        for (int i = 0; i < 5; ++i) {
            for (int j = 0; j < 5; ++j) {
                const int raw = i > j ? i - j : j - i;
                t.push_back(make_rational(raw < 5 - raw ? raw : 5 - raw, 5));
            }
        }
        const auto fin = make_finite(FiniteSpace(5, t), {Permutation({1, 2, 3, 4, 0})});
        std::vector<Verdict> agreement;
        for (int i = 0; i < 5; ++i) {
            const Point x = Point::finite(i);
            const Verdict eq = equicontinuity_point_check(*fin, x, cfg);
            for (int l = 1; l <= 5; ++l) {
                agreement.push_back(equality_verdict(eq, gl_membership(*fin, x, l, cfg)));
            }
        }
        cases.push_back(make_case(
            "dichotomy/gl-intersection",
            "on a finite system the equicontinuity set equals the intersection of the G_l "
            "sets down to the metric resolution",
            "five-cycle, l = 1..5", {},
            {{"membership agrees at every point and level",
              conjunction(agreement, "exhaustive")}}));
    }
    return cases;
}

std::vector<TheoremCase> standard_battery(const AnalysisConfig& cfg) {
    cfg.validate();
    std::vector<TheoremCase> all;
    auto append = [&](std::vector<TheoremCase> v) {
        for (auto& c : v) all.push_back(std::move(c));
    };

    const auto swap_map = [](const Point& p) { return symbol_swap(p); };

    const SystemHandle shift2 = make_shift(2, 2);
    const SystemHandle shift1 = make_shift(1, 2);
    const SystemHandle rot1 = make_rotation_induced(0.6180339887498949, LinearForm({Int(1)}));
    const SystemHandle rot2 =
        make_rotation_induced(0.6180339887498949, LinearForm({Int(1), Int(1)}));
    const ConeIndex k12(1, 2), k11(1, 1);

    // Symbol swap commutes with translation, so the swapped shift is the
    // shift itself: both sides classify through exact rules.
    append(conjugacy_suite(shift2, shift2, swap_map, swap_map, k12, cfg));
    // The same maps through an opaque wrapper: the image side only has
    // windowed evidence, equality degrades to compatibility.
    append(conjugacy_suite(shift2, make_conjugate(shift2, swap_map, swap_map), swap_map,
                           swap_map, k12, cfg));

    append(product_suite(shift2, rot2, k12, cfg));
    append(product_suite(rot1, rot1, k11, cfg));

    append(induced_suite(shift1, LinearForm({Int(2), Int(-1)}), k12, cfg));
    append(induced_suite(shift1, LinearForm({Int(1), Int(1)}), k12, cfg));
    append(induced_suite(shift1, LinearForm({Int(1)}), k11, cfg));
    append(induced_suite(rot1, LinearForm({Int(1), Int(1)}), k12, cfg));

    append(dichotomy_suite(cfg));
    return all;
}

bool any_refuted(const std::vector<TheoremCase>& cases) {
    return std::any_of(cases.begin(), cases.end(),
                       [](const TheoremCase& c) { return c.status == CaseStatus::refuted; });
}

std::string describe_case(const TheoremCase& c) {
    std::ostringstream os;
    os << c.id << ": " << case_status_name(c.status) << "\n";
    os << "  statement: " << c.statement << "\n";
    os << "  instance:  " << c.instance << "\n";
    auto dump = [&](const char* head, const std::vector<std::pair<std::string, Verdict>>& vs) {
        for (const auto& [label, v] : vs) {
            os << "  " << head << " " << label << ": " << outcome_name(v.outcome) << " ("
               << (v.rule.empty() ? "-" : v.rule) << (v.exact ? ", exact" : ", evidence");
            if (v.window > 0) os << ", window " << v.window;
            os << ")";
            if (v.witness && !v.witness->notes.empty()) os << " -- " << v.witness->notes;
            os << "\n";
        }
    };
    dump("given", c.hypotheses);
    dump("then ", c.conclusions);
    if (!c.note.empty()) os << "  note: " << c.note << "\n";
    return os.str();
}

}  // namespace ktc
