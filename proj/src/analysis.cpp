#include "ktc/analysis.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ktc {

namespace {

// ---------- arithmetic helpers ----------

Int mod_int(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += abs_int(m);
    return r;
}

// Distance from a to the nearest multiple of m (m > 0).
Int circular_distance(const Int& a, const Int& m) {
    const Int r = mod_int(a, m);
    return std::min(r, Int(m - r));
}

Rational pow2_neg_rational(const Int& r) { return Dyadic::pow2_neg(r).to_rational(); }

// Smallest r >= 0 with 2^-r <= eps.
int eps_exponent(const Rational& eps) {
    if (eps <= 0) throw std::invalid_argument("epsilon must be positive");
    Rational v(1);
    for (int r = 0; r <= 4096; ++r) {
        if (v <= eps) return r;
        v /= 2;
    }
    throw std::invalid_argument("epsilon too small for dyadic search");
}

LatticeVector signed_diagonal(const ConeIndex& k, const Int& t) {
    std::vector<Int> c(static_cast<std::size_t>(k.dim));
    for (int i = 0; i < k.dim; ++i) c[static_cast<std::size_t>(i)] = Int(k.sign(i)) * t;
    return LatticeVector{std::move(c)};
}

LatticeVector axis_step(int dim, int axis, const Int& v) {
    std::vector<Int> c(static_cast<std::size_t>(dim), Int(0));
    c[static_cast<std::size_t>(axis)] = v;
    return LatticeVector{std::move(c)};
}

Witness make_witness(std::vector<LatticeVector> pts, std::string notes) {
    return Witness{std::move(pts), std::move(notes)};
}

using GridFn = std::function<Verdict(const Rational&)>;

std::vector<std::pair<Rational, Verdict>> grid_fill(const AnalysisConfig& cfg, const GridFn& f) {
    std::vector<std::pair<Rational, Verdict>> out;
    out.reserve(cfg.eps_grid.size());
    for (const auto& e : cfg.eps_grid) out.emplace_back(e, f(e));
    return out;
}

Verdict combine_ly(const Verdict& prox, const Verdict& asym, const std::string& rule, int window) {
    if (prox.outcome == Outcome::yes && asym.outcome == Outcome::no) {
        return Verdict::yes(rule, prox.exact && asym.exact, std::nullopt, window);
    }
    if (prox.outcome == Outcome::no) return Verdict::no(rule, prox.exact, std::nullopt, window);
    if (asym.outcome == Outcome::yes) return Verdict::no(rule, asym.exact, std::nullopt, window);
    return Verdict::unknown(rule, window);
}

// Internal invariants between the verdict fields; a violation is a bug.
void check_consistency(const PairClass& pc) {
    const auto& p = pc.proximal.outcome;
    const auto& a = pc.asymptotic.outcome;
    const auto& l = pc.li_yorke.outcome;
    if (l == Outcome::yes && (p != Outcome::yes || a != Outcome::no)) {
        throw std::logic_error("pair class: li_yorke requires proximal and not asymptotic");
    }
    if (a == Outcome::yes && p == Outcome::no) {
        throw std::logic_error("pair class: asymptotic implies proximal");
    }
    // asymptotic_at is monotone: yes at a smaller eps forces yes at larger ones.
    for (std::size_t i = 0; i + 1 < pc.asymptotic_at.size(); ++i) {
        const auto& big = pc.asymptotic_at[i];        // grid is strictly decreasing
        const auto& small = pc.asymptotic_at[i + 1];
        if (small.second.outcome == Outcome::yes && big.second.outcome == Outcome::no) {
            throw std::logic_error("pair class: asymptotic_at not monotone over the grid");
        }
    }
}

PairClass finish(PairClass pc) {
    check_consistency(pc);
    return pc;
}

// ---------- generic windowed evidence ----------

// Windows confirm proximality witnesses (exact dyadic threshold) and refute
// asymptoticity; everything else stays Unknown.
PairClass classify_windowed(const System& sys, const Point& x, const Point& y, const ConeIndex& k,
                            const AnalysisConfig& cfg) {
    const int W = cfg.window;
    const int half = W / 2;
    const int ext = W + half;

    const auto profile = distance_profile(sys, x, y, k, ext);
    std::map<LatticeVector, std::size_t> index;
    for (std::size_t i = 0; i < profile.size(); ++i) index.emplace(profile[i].n, i);

    std::size_t count_w = 0, count_half = 0;
    for (const auto& e : profile) {
        if (e.n.max_norm() <= W) ++count_w;
        if (e.n.max_norm() <= half) ++count_half;
    }

    PairClass pc;

    // Proximality: a profile value at or below 2^-floor(W/2) inside the W-shell
    // is a confirmed witness, provided the profile is exactly represented.
    const Rational thr = pow2_neg_rational(Int(half));
    bool all_exact = true;
    std::optional<std::size_t> hit;
    for (std::size_t i = 0; i < count_w; ++i) {
        if (!profile[i].value.is_exact()) all_exact = false;
        if (!hit && profile[i].value.leq(thr)) hit = i;
    }
    if (hit && all_exact) {
        std::ostringstream os;
        os << "profile value " << profile[*hit].value.to_string() << " <= 2^-" << half
           << " at cone depth within " << W;
        pc.proximal = Verdict::yes("window-threshold", false,
                                   make_witness({profile[*hit].n}, os.str()), W);
    } else if (hit) {
        pc.proximal = Verdict::unknown("window-float", W);
    } else {
        pc.proximal = Verdict::unknown("window", W);
    }

    // Asymptoticity at eps is refuted when every tail start n in the half
    // shell has a continuation m in the W shell with profile(n + m) > eps.
    auto refute_at = [&](const Rational& eps) -> Verdict {
        std::optional<LatticeVector> example;
        for (std::size_t i = 0; i < count_half; ++i) {
            const LatticeVector& n = profile[i].n;
            bool found = false;
            for (std::size_t j = 0; j < count_w; ++j) {
                const auto it = index.find(n + profile[j].n);
                if (it == index.end()) {
                    throw std::logic_error("windowed profile misses an interior sum");
                }
                if (profile[it->second].value.greater(eps)) {
                    found = true;
                    if (!example) example = n + profile[j].n;
                    break;
                }
            }
            if (!found) return Verdict::unknown("window", W);
        }
        std::ostringstream os;
        os << "every tail start within depth " << half << " reaches a value > "
           << rational_to_string(eps) << " inside depth " << W;
        std::vector<LatticeVector> pts;
        if (example) pts.push_back(*example);
        return Verdict::no("window-refute", false, make_witness(std::move(pts), os.str()), W);
    };

    pc.asymptotic_at = grid_fill(cfg, refute_at);

    pc.asymptotic = Verdict::unknown("window", W);
    for (const auto& [eps, v] : pc.asymptotic_at) {
        if (v.outcome == Outcome::no) {
            pc.asymptotic = Verdict::no("window-refute", false, v.witness, W);
            break;
        }
    }

    pc.li_yorke = combine_ly(pc.proximal, pc.asymptotic, "window-combine", W);
    return pc;
}

// ---------- exact path: finite-order systems ----------

constexpr long long kMaxAxisProbe = 4096;
constexpr long long kMaxPeriodBox = 1 << 20;

std::optional<std::vector<long long>> pair_axis_periods(const System& sys, const Point& x,
                                                        const Point& y) {
    const int d = sys.dimension();
    std::vector<long long> periods(static_cast<std::size_t>(d));
    long long box = 1;
    for (int i = 0; i < d; ++i) {
        Point px = x;
        Point py = y;
        const LatticeVector step = axis_step(d, i, Int(1));
        long long p = 0;
        for (long long c = 1; c <= kMaxAxisProbe; ++c) {
            px = sys.act(step, px);
            py = sys.act(step, py);
            if (point_equal(px, x) && point_equal(py, y)) {
                p = c;
                break;
            }
        }
        if (p == 0) return std::nullopt;
        periods[static_cast<std::size_t>(i)] = p;
        box *= p;
        if (box > kMaxPeriodBox) return std::nullopt;
    }
    return periods;
}

std::optional<PairClass> classify_finite_order(const System& sys, const Point& x, const Point& y,
                                               const ConeIndex& k, const AnalysisConfig& cfg) {
    const auto periods = pair_axis_periods(sys, x, y);
    if (!periods) return std::nullopt;
    const int d = sys.dimension();

    bool have = false;
    Rational mn, mx;
    LatticeVector argmin, argmax;
    std::vector<long long> t(static_cast<std::size_t>(d), 1);
    while (true) {
        std::vector<Int> coords(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) {
            coords[static_cast<std::size_t>(i)] = Int(k.sign(i) * t[static_cast<std::size_t>(i)]);
        }
        const LatticeVector n{std::move(coords)};
        const Dist dist = sys.dist(sys.act(n, x), sys.act(n, y));
        if (!dist.exact) return std::nullopt;  // exact rule needs exact values
        const Rational& v = *dist.exact;
        if (!have || v < mn) {
            mn = v;
            argmin = n;
        }
        if (!have || v > mx) {
            mx = v;
            argmax = n;
        }
        have = true;
        int axis = 0;
        while (axis < d && t[static_cast<std::size_t>(axis)] ==
                               (*periods)[static_cast<std::size_t>(axis)]) {
            t[static_cast<std::size_t>(axis)] = 1;
            ++axis;
        }
        if (axis == d) break;
        ++t[static_cast<std::size_t>(axis)];
    }

    std::ostringstream per;
    per << "per-axis pair periods (";
    for (int i = 0; i < d; ++i) per << (i ? ", " : "") << (*periods)[static_cast<std::size_t>(i)];
    per << "); profile is periodic, so the period box carries liminf and limsup";
    const std::string notes = per.str();
    const std::string rule = "injective-finite";

    PairClass pc;
    if (mn == 0) {
        pc.proximal = Verdict::yes(rule, true, make_witness({argmin}, notes));
    } else {
        pc.proximal = Verdict::no(rule, true, make_witness({argmin}, notes));
    }
    if (mx == 0) {
        pc.asymptotic = Verdict::yes(rule, true, make_witness({argmax}, notes));
    } else {
        pc.asymptotic = Verdict::no(rule, true, make_witness({argmax}, notes));
    }
    pc.li_yorke = combine_ly(pc.proximal, pc.asymptotic, rule, 0);
    pc.asymptotic_at = grid_fill(cfg, [&](const Rational& eps) {
        if (mx <= eps) return Verdict::yes(rule, true, make_witness({argmax}, notes));
        return Verdict::no(rule, true, make_witness({argmax}, notes));
    });
    pc.liminf = mn;
    pc.limsup = mx;
    return pc;
}

// ---------- exact path: isometric systems ----------

PairClass classify_isometric(const System& sys, const Point& x, const Point& y,
                             const AnalysisConfig& cfg) {
    const Dist c = sys.dist(x, y);
    const std::string rule = "isometry";
    std::ostringstream os;
    os << "all maps act(n, .) preserve the metric; the profile is constant " << c.to_string();
    const std::string notes = os.str();

    PairClass pc;
    pc.proximal = Verdict::no(rule, true, make_witness({}, notes));
    pc.asymptotic = Verdict::no(rule, true, make_witness({}, notes));
    pc.li_yorke = Verdict::no(rule, true, make_witness({}, notes));
    pc.asymptotic_at = grid_fill(cfg, [&](const Rational& eps) {
        if (c.leq(eps)) return Verdict::yes(rule, true, make_witness({}, notes));
        return Verdict::no(rule, true, make_witness({}, notes));
    });
    if (c.exact) {
        pc.liminf = *c.exact;
        pc.limsup = *c.exact;
    }
    return pc;
}

// ---------- exact path: full shifts via the difference set ----------

PairClass all_small_class(const std::string& rule, const Witness& w, const AnalysisConfig& cfg) {
    // Profile vanishes along the cone tail: proximal and asymptotic.
    PairClass pc;
    pc.proximal = Verdict::yes(rule, true, w);
    pc.asymptotic = Verdict::yes(rule, true, w);
    pc.li_yorke = Verdict::no(rule, true, w);
    pc.asymptotic_at =
        grid_fill(cfg, [&](const Rational&) { return Verdict::yes(rule, true, w); });
    pc.liminf = Rational(0);
    pc.limsup = Rational(0);
    return pc;
}

// liminf = lo, limsup = hi with 0 < lo <= hi: not proximal, not asymptotic.
PairClass banded_class(const std::string& rule, const Witness& w, const Rational& lo,
                       const Rational& hi, const AnalysisConfig& cfg) {
    PairClass pc;
    pc.proximal = Verdict::no(rule, true, w);
    pc.asymptotic = Verdict::no(rule, true, w);
    pc.li_yorke = Verdict::no(rule, true, w);
    pc.asymptotic_at = grid_fill(cfg, [&](const Rational& eps) {
        if (hi <= eps) return Verdict::yes(rule, true, w);
        return Verdict::no(rule, true, w);
    });
    pc.liminf = lo;
    pc.limsup = hi;
    return pc;
}

// liminf = 0 < limsup: proximal, not asymptotic: a Li-Yorke pair.
PairClass oscillating_class(const std::string& rule, const Witness& w, const Rational& hi,
                            const AnalysisConfig& cfg) {
    PairClass pc;
    pc.proximal = Verdict::yes(rule, true, w);
    pc.asymptotic = Verdict::no(rule, true, w);
    pc.li_yorke = Verdict::yes(rule, true, w);
    pc.asymptotic_at = grid_fill(cfg, [&](const Rational& eps) {
        if (hi <= eps) return Verdict::yes(rule, true, w);
        return Verdict::no(rule, true, w);
    });
    pc.liminf = Rational(0);
    pc.limsup = hi;
    return pc;
}

std::optional<PairClass> classify_shift_pair(const System& sys, const Point& x, const Point& y,
                                             const ConeIndex& k, const AnalysisConfig& cfg) {
    const SymbolicConfig& cx = x.as_config();
    const SymbolicConfig& cy = y.as_config();
    const DiffSet D = difference_set(cx, cy);
    (void)sys;

    switch (D.kind) {
        case DiffSet::Kind::empty: {
            // Equal pairs are handled before dispatch; keep a safe answer.
            Witness w = make_witness({}, "configurations are equal");
            return all_small_class("identical-pair", w, cfg);
        }
        case DiffSet::Kind::finite: {
            Int M(0);
            for (const auto& c : D.cells) M = std::max(M, c.max_norm());
            const int e0 = eps_exponent(cfg.eps_grid.back());
            const LatticeVector deep = signed_diagonal(k, Int(M + e0 + 1));
            std::ostringstream os;
            os << D.cells.size() << " differing cells, max norm " << M
               << "; cone depth beyond it leaves the tails equal";
            return all_small_class("diffset-finite", make_witness({deep}, os.str()), cfg);
        }
        case DiffSet::Kind::periodic: {
            const Int cov = periodic_covering_radius(D);
            std::ostringstream os;
            os << "differences recur with covering radius " << cov
               << "; the profile stays within [2^-" << cov << ", 1]";
            Witness w = make_witness({}, os.str());
            return banded_class("diffset-periodic", w, pow2_neg_rational(cov), Rational(1), cfg);
        }
        case DiffSet::Kind::block_line: {
            const LatticeVector zero = LatticeVector::zero(D.dim);
            if (cone_greater(k, D.direction, zero)) {
                Int t = D.base * D.base;  // a block start deep enough to sit in the cone
                while (t <= D.offset.max_norm()) t *= D.base;
                const LatticeVector cell = D.direction * t + D.offset;
                std::ostringstream os;
                os << "block family along direction " << D.direction.to_string()
                   << " inside the cone: blocks give value 1 arbitrarily deep, widening gaps "
                      "give values arbitrarily small";
                return oscillating_class("diffset-blockline", make_witness({cell}, os.str()),
                                         Rational(1), cfg);
            }
            // Some coordinate never advances into the cone: the distance from
            // deep cone points to the block cells diverges uniformly.
            int i0 = 0;
            for (int i = 0; i < k.dim; ++i) {
                if (Int(k.sign(i)) * D.direction[i] <= 0) {
                    i0 = i;
                    break;
                }
            }
            const int e0 = eps_exponent(cfg.eps_grid.back());
            const LatticeVector deep =
                signed_diagonal(k, Int(D.offset.max_norm() + Int(e0) + 2));
            std::ostringstream os;
            os << "block direction leaves the cone at coordinate " << i0
               << "; distances to the blocks grow without bound along the cone";
            return all_small_class("diffset-blockline-escape", make_witness({deep}, os.str()),
                                   cfg);
        }
        case DiffSet::Kind::opaque:
            return std::nullopt;
    }
    return std::nullopt;
}

// ---------- exact path: actions induced from the 1-D shift ----------

struct ConeImage {
    enum class Kind { zero, lattice, upward, downward };
    Kind kind = Kind::zero;
    Int G = 0;  // gcd of the nonzero signed coefficients
    Int c = 0;  // sum of the signed coefficients
};

ConeImage cone_image(const LinearForm& h, const ConeIndex& k) {
    ConeImage im;
    bool pos = false, neg = false;
    for (int i = 0; i < h.dim(); ++i) {
        const Int g = Int(k.sign(i)) * h[i];
        im.c += g;
        if (g > 0) pos = true;
        if (g < 0) neg = true;
        im.G = gcd_int(im.G, g);
    }
    if (!pos && !neg) {
        im.kind = ConeImage::Kind::zero;
    } else if (pos && neg) {
        im.kind = ConeImage::Kind::lattice;
    } else if (pos) {
        im.kind = ConeImage::Kind::upward;
    } else {
        im.kind = ConeImage::Kind::downward;
    }
    return im;
}

std::optional<PairClass> classify_induced_shift(const System& sys, const Point& x, const Point& y,
                                                const ConeIndex& k, const AnalysisConfig& cfg) {
    const LinearForm& h = *sys.induced_form();
    const SymbolicConfig& cx = x.as_config();
    const SymbolicConfig& cy = y.as_config();
    const DiffSet D = difference_set(cx, cy);
    if (D.kind == DiffSet::Kind::opaque) return std::nullopt;
    const ConeImage im = cone_image(h, k);

    if (im.kind == ConeImage::Kind::zero) {
        // r vanishes identically: the profile is the constant d(x, y).
        const Dyadic v0 = symbolic_distance(cx, cy);
        const Rational v = v0.to_rational();
        Witness w = make_witness({}, "the form is zero on this cone; the profile is constant " +
                                         v0.to_string());
        if (v == 0) return all_small_class("induced-constant", w, cfg);
        return banded_class("induced-constant", w, v, v, cfg);
    }

    const bool up = im.kind == ConeImage::Kind::upward;
    const bool down = im.kind == ConeImage::Kind::downward;
    const Int G = im.G;

    switch (D.kind) {
        case DiffSet::Kind::empty: {
            Witness w = make_witness({}, "configurations are equal");
            return all_small_class("identical-pair", w, cfg);
        }
        case DiffSet::Kind::finite: {
            if (up || down) {
                // |r(n)| grows uniformly with cone depth; the finitely many
                // differing cells fall behind.
                Witness w = make_witness(
                    {}, "the form escapes to " + std::string(up ? "+infinity" : "-infinity") +
                            " along the cone; finitely many differing cells are left behind");
                return all_small_class("induced-escape", w, cfg);
            }
            // Mixed signs: the cone reaches every multiple of G at every depth.
            Int delta0(-1);
            for (const auto& cell : D.cells) {
                const Int d0 = circular_distance(cell[0], G);
                if (delta0 < 0 || d0 < delta0) delta0 = d0;
            }
            std::ostringstream os;
            os << "cone image is " << G << "Z; nearest differing cell sits at distance " << delta0
               << " from it, reached at every depth, while the image also escapes it";
            Witness w = make_witness({}, os.str());
            return oscillating_class("induced-lattice", w, pow2_neg_rational(delta0), cfg);
        }
        case DiffSet::Kind::periodic: {
            const Int p = Int(D.period[0]);
            const Int gp = gcd_int(G, p);
            Int m0(-1), M0(-1);
            for (Int a = 0; a < p; a += gp) {
                Int best(-1);
                for (const auto& res : D.residues) {
                    const Int dd = circular_distance(Int(a - res[0]), p);
                    if (best < 0 || dd < best) best = dd;
                }
                if (m0 < 0 || best < m0) m0 = best;
                if (M0 < 0 || best > M0) M0 = best;
            }
            std::ostringstream os;
            os << "reachable shift amounts cover the residues " << gp << "Z mod " << p
               << "; distances to the periodic differences range over [" << m0 << ", " << M0
               << "]";
            Witness w = make_witness({}, os.str());
            return banded_class("induced-periodic", w, pow2_neg_rational(M0),
                                pow2_neg_rational(m0), cfg);
        }
        case DiffSet::Kind::block_line: {
            const Int w0 = D.direction[0];
            const bool reachable =
                im.kind == ConeImage::Kind::lattice || (up && w0 > 0) || (down && w0 < 0);
            if (!reachable) {
                Witness w = make_witness(
                    {}, "the block cells and the cone image escape to opposite ends of the line");
                return all_small_class("induced-escape", w, cfg);
            }
            const Int g1 = gcd_int(abs_int(w0), G);
            const Int delta1 = circular_distance(D.offset[0], g1);
            std::ostringstream os;
            os << "blocks along " << w0 << "Z + " << D.offset[0]
               << " meet the cone image within distance " << delta1
               << " infinitely deep; widening gaps give arbitrarily small values";
            Witness w = make_witness({}, os.str());
            return oscillating_class("induced-blockline", w, pow2_neg_rational(delta1), cfg);
        }
        case DiffSet::Kind::opaque:
            return std::nullopt;
    }
    return std::nullopt;
}

// ---------- product combination ----------

PairClass classify_product(const System& sys, const Point& x, const Point& y, const ConeIndex& k,
                           const AnalysisConfig& cfg) {
    const auto [A, B] = sys.factor_systems();
    if (!x.is_product() || !y.is_product()) {
        throw std::invalid_argument("product system expects product points");
    }

    // A pair varying in one coordinate only reduces to that factor: the sup
    // metric collapses to the factor metric along the whole orbit.
    if (point_equal(x.second(), y.second())) {
        return classify_pair(*A, x.first(), y.first(), k, cfg);
    }
    if (point_equal(x.first(), y.first())) {
        return classify_pair(*B, x.second(), y.second(), k, cfg);
    }

    const PairClass ca = classify_pair(*A, x.first(), y.first(), k, cfg);
    const PairClass cb = classify_pair(*B, x.second(), y.second(), k, cfg);
    const std::string rule = "product-combine";

    // sup over a tail of max(a_n, b_n) is the max of the factor sups, so
    // asymptoticity (overall and at each eps) combines by conjunction.
    auto and_combine = [&](const Verdict& va, const Verdict& vb) -> Verdict {
        if (va.outcome == Outcome::yes && vb.outcome == Outcome::yes) {
            return Verdict::yes(rule, va.exact && vb.exact);
        }
        if (va.outcome == Outcome::no) return Verdict::no(rule, va.exact);
        if (vb.outcome == Outcome::no) return Verdict::no(rule, vb.exact);
        return Verdict::unknown(rule, cfg.window);
    };

    PairClass pc;
    pc.asymptotic = and_combine(ca.asymptotic, cb.asymptotic);
    pc.asymptotic_at.reserve(cfg.eps_grid.size());
    for (std::size_t i = 0; i < cfg.eps_grid.size(); ++i) {
        pc.asymptotic_at.emplace_back(cfg.eps_grid[i],
                                      and_combine(ca.asymptotic_at[i].second,
                                                  cb.asymptotic_at[i].second));
    }

    // The product profile dominates both factor profiles, so proximality needs
    // both factors proximal; it holds when one factor is asymptotic with a
    // structural rule (uniformly small tails) and the other proximal with
    // arbitrarily deep exact witnesses.
    if (ca.proximal.outcome == Outcome::no) {
        pc.proximal = Verdict::no(rule, ca.proximal.exact);
    } else if (cb.proximal.outcome == Outcome::no) {
        pc.proximal = Verdict::no(rule, cb.proximal.exact);
    } else if (ca.asymptotic.outcome == Outcome::yes && cb.asymptotic.outcome == Outcome::yes) {
        pc.proximal = Verdict::yes(rule, ca.asymptotic.exact && cb.asymptotic.exact);
    } else if (ca.asymptotic.outcome == Outcome::yes && ca.asymptotic.exact &&
               cb.proximal.outcome == Outcome::yes && cb.proximal.exact) {
        pc.proximal = Verdict::yes(rule, true);
    } else if (cb.asymptotic.outcome == Outcome::yes && cb.asymptotic.exact &&
               ca.proximal.outcome == Outcome::yes && ca.proximal.exact) {
        pc.proximal = Verdict::yes(rule, true);
    } else {
        pc.proximal = Verdict::unknown(rule, cfg.window);
    }

    // Exact liminf/limsup transfer when one side vanishes uniformly.
    if (ca.asymptotic.outcome == Outcome::yes && cb.asymptotic.outcome == Outcome::yes) {
        pc.liminf = Rational(0);
        pc.limsup = Rational(0);
    } else if (ca.asymptotic.outcome == Outcome::yes && ca.asymptotic.exact && ca.limsup &&
               *ca.limsup == 0) {
        pc.liminf = cb.liminf;
        pc.limsup = cb.limsup;
    } else if (cb.asymptotic.outcome == Outcome::yes && cb.asymptotic.exact && cb.limsup &&
               *cb.limsup == 0) {
        pc.liminf = ca.liminf;
        pc.limsup = ca.limsup;
    }

    // Fill any undecided field with windowed evidence on the product itself.
    bool need_window = pc.proximal.outcome == Outcome::unknown ||
                       pc.asymptotic.outcome == Outcome::unknown;
    for (const auto& [eps, v] : pc.asymptotic_at) {
        if (v.outcome == Outcome::unknown) need_window = true;
    }
    if (need_window) {
        const PairClass wc = classify_windowed(sys, x, y, k, cfg);
        if (pc.proximal.outcome == Outcome::unknown) pc.proximal = wc.proximal;
        if (pc.asymptotic.outcome == Outcome::unknown) pc.asymptotic = wc.asymptotic;
        for (std::size_t i = 0; i < pc.asymptotic_at.size(); ++i) {
            if (pc.asymptotic_at[i].second.outcome == Outcome::unknown) {
                pc.asymptotic_at[i].second = wc.asymptotic_at[i].second;
            }
        }
    }

    pc.li_yorke = combine_ly(pc.proximal, pc.asymptotic, rule, cfg.window);
    return pc;
}

// ---------- shared structural facts ----------

std::optional<Rational> min_positive_distance(const System& sys) {
    if (const FiniteSpace* fs = sys.finite_space()) return fs->min_positive();
    switch (sys.kind()) {
        case SystemKind::product: {
            const auto [A, B] = sys.factor_systems();
            const auto ma = min_positive_distance(*A);
            const auto mb = min_positive_distance(*B);
            if (ma && mb) return std::min(*ma, *mb);
            return std::nullopt;
        }
        case SystemKind::conjugate:
        case SystemKind::induced: {
            const auto base = sys.base_system();
            return base ? min_positive_distance(*base) : std::nullopt;
        }
        default:
            return std::nullopt;
    }
}

bool induced_over_shift(const System& sys) {
    if (sys.kind() != SystemKind::induced) return false;
    const auto base = sys.base_system();
    return base && base->kind() == SystemKind::shift && base->dimension() == 1;
}

// A cone point n of depth >= 1 whose form value has absolute value >= target;
// exists whenever some coefficient is nonzero.
LatticeVector cone_point_with_large_form(const LinearForm& h, const ConeIndex& k,
                                         const Int& target) {
    int p = -1;
    for (int i = 0; i < h.dim(); ++i) {
        if (h[i] != 0) {
            p = i;
            break;
        }
    }
    if (p < 0) throw std::logic_error("form is identically zero");
    Int c(0);
    for (int i = 0; i < h.dim(); ++i) c += Int(k.sign(i)) * h[i];
    const Int gp = abs_int(h[p]);
    const Int N = (abs_int(c) + abs_int(target) + 1 + gp - 1) / gp;
    const LatticeVector n = signed_diagonal(k, Int(1)) + axis_step(h.dim(), p, Int(k.sign(p)) * N);
    if (abs_int(r_eval(h, n)) < abs_int(target)) {
        throw std::logic_error("form value bound failed");
    }
    return n;
}

}  // namespace

// ---------- public entry points ----------

PairClass classify_pair(const System& sys, const Point& x, const Point& y, const ConeIndex& k,
                        const AnalysisConfig& cfg) {
    cfg.validate();
    if (k.dim != sys.dimension()) throw std::invalid_argument("cone dimension mismatch");

    if (point_equal(x, y)) {
        Witness w = make_witness({}, "the two points are equal");
        return finish(all_small_class("identical-pair", w, cfg));
    }

    if (sys.flags().is_finite) {
        if (auto pc = classify_finite_order(sys, x, y, k, cfg)) return finish(std::move(*pc));
    }
    if (sys.flags().is_isometric) {
        return finish(classify_isometric(sys, x, y, cfg));
    }
    if (sys.kind() == SystemKind::shift) {
        if (auto pc = classify_shift_pair(sys, x, y, k, cfg)) return finish(std::move(*pc));
    }
    if (induced_over_shift(sys)) {
        if (auto pc = classify_induced_shift(sys, x, y, k, cfg)) return finish(std::move(*pc));
    }
    if (sys.kind() == SystemKind::product) {
        return finish(classify_product(sys, x, y, k, cfg));
    }
    return finish(classify_windowed(sys, x, y, k, cfg));
}

Verdict scrambled_set_check(const System& sys, const std::vector<Point>& points,
                            const ConeIndex& k, const AnalysisConfig& cfg) {
    cfg.validate();
    if (points.size() < 2) throw std::invalid_argument("scrambled set needs at least two points");
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            if (point_equal(points[i], points[j])) {
                throw std::invalid_argument("scrambled set candidates must be distinct");
            }
        }
    }

    bool all_exact = true;
    bool any_unknown = false;
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            const PairClass pc = classify_pair(sys, points[i], points[j], k, cfg);
            if (pc.li_yorke.outcome == Outcome::no) {
                std::ostringstream os;
                os << "pair (" << i << ", " << j << ") is not Li-Yorke (" << pc.li_yorke.rule
                   << ")";
                return Verdict::no("pairwise-classification", pc.li_yorke.exact,
                                   make_witness({}, os.str()), cfg.window);
            }
            if (pc.li_yorke.outcome == Outcome::unknown) {
                any_unknown = true;
            } else {
                all_exact = all_exact && pc.li_yorke.exact;
            }
        }
    }
    if (any_unknown) return Verdict::unknown("pairwise-classification", cfg.window);
    return Verdict::yes("pairwise-classification", all_exact,
                        make_witness({}, "every pair classified Li-Yorke"), cfg.window);
}

Verdict sensitivity_check(const System& sys, const ConeIndex& k, const AnalysisConfig& cfg) {
    cfg.validate();
    if (k.dim != sys.dimension()) throw std::invalid_argument("cone dimension mismatch");
    const int W = cfg.window;

    if (sys.flags().is_isometric) {
        return Verdict::no("isometry", true,
                           make_witness({}, "metric preserved: initial distances never grow"));
    }
    if (const auto mu = min_positive_distance(sys)) {
        std::ostringstream os;
        os << "smallest positive distance " << rational_to_string(*mu)
           << ": companions closer than it coincide with the point";
        return Verdict::no("finite-exhaustive", true, make_witness({}, os.str()));
    }

    if (sys.kind() == SystemKind::shift) {
        // Flipping one cell at cone depth R+1 keeps the companion 2^-(R+1)
        // close and separates to distance 1 at that cell.
        const int R = eps_exponent(cfg.eps_grid.back());
        const LatticeVector cell = signed_diagonal(k, Int(R + 1));
        const auto samples = sys.sample_points(1, cfg.seed);
        const SymbolicConfig& cx = samples.at(0).as_config();
        const SymbolicConfig cy = cx.with_defect(cell, (cx.at(cell) + 1) % cx.alphabet());
        const Point px = Point::config(cx);
        const Point py = Point::config(cy);
        if (!sys.dist(px, py).leq(pow2_neg_rational(Int(R)))) {
            throw std::logic_error("shift flip companion escaped its ball");
        }
        if (!sys.dist(sys.act(cell, px), sys.act(cell, py)).greater(cfg.delta)) {
            throw std::logic_error("shift flip failed to separate");
        }
        std::ostringstream os;
        os << "delta = " << rational_to_string(cfg.delta)
           << "; a single flipped cell at any cone depth separates to distance 1";
        return Verdict::yes("shift-flip", true, make_witness({cell}, os.str()));
    }

    if (induced_over_shift(sys)) {
        const LinearForm& h = *sys.induced_form();
        bool zero = true;
        for (int i = 0; i < h.dim(); ++i) zero = zero && h[i] == 0;
        if (zero) {
            return Verdict::no("induced-constant", true,
                               make_witness({}, "every act(n, .) is the identity"));
        }
        const int R = eps_exponent(cfg.eps_grid.back());
        const LatticeVector n = cone_point_with_large_form(h, k, Int(R + 1));
        const Int s = r_eval(h, n);
        const auto samples = sys.sample_points(1, cfg.seed);
        const SymbolicConfig& cx = samples.at(0).as_config();
        const LatticeVector cell = axis_step(1, 0, s);
        const SymbolicConfig cy = cx.with_defect(cell, (cx.at(cell) + 1) % cx.alphabet());
        const Point px = Point::config(cx);
        const Point py = Point::config(cy);
        if (!sys.dist(px, py).leq(pow2_neg_rational(Int(R)))) {
            throw std::logic_error("induced flip companion escaped its ball");
        }
        if (!sys.dist(sys.act(n, px), sys.act(n, py)).greater(cfg.delta)) {
            throw std::logic_error("induced flip failed to separate");
        }
        std::ostringstream os;
        os << "delta = " << rational_to_string(cfg.delta) << "; the form reaches " << s
           << " inside the cone, pulling the flipped cell to the origin";
        return Verdict::yes("induced-flip", true, make_witness({n}, os.str()));
    }

    if (sys.kind() == SystemKind::product) {
        const auto [A, B] = sys.factor_systems();
        const Verdict va = sensitivity_check(*A, k, cfg);
        const Verdict vb = sensitivity_check(*B, k, cfg);
        if (va.outcome == Outcome::yes || vb.outcome == Outcome::yes) {
            const Verdict& src = (va.outcome == Outcome::yes && va.exact)   ? va
                                 : (vb.outcome == Outcome::yes && vb.exact) ? vb
                                 : (va.outcome == Outcome::yes)             ? va
                                                                            : vb;
            std::ostringstream os;
            os << "a sensitive factor separates pairs that vary in that coordinate only ("
               << src.rule << ")";
            return Verdict::yes("product-transport", src.exact, make_witness({}, os.str()),
                                src.window);
        }
        if (va.outcome == Outcome::no && va.exact && vb.outcome == Outcome::no && vb.exact) {
            return Verdict::no(
                "product-factors", true,
                make_witness({}, "for any delta, stable points of both factors pair into a "
                                 "stable product point"));
        }
        // fall through to windowed evidence below
    }

    // Windowed evidence: every sample separates from some arbitrarily close
    // companion inside the window.
    const auto samples = sys.sample_points(cfg.sample_count, cfg.seed);
    std::optional<LatticeVector> first_sep;
    for (std::size_t si = 0; si < samples.size(); ++si) {
        const Point& x = samples[si];
        for (const Rational& eps : cfg.eps_grid) {
            bool separated = false;
            for (std::uint64_t attempt = 0; attempt < 4 && !separated; ++attempt) {
                const auto y = sys.perturb(x, eps, cfg.seed + 17 * attempt + si);
                if (!y) continue;
                const auto prof = distance_profile(sys, x, *y, k, W);
                for (const auto& e : prof) {
                    if (e.value.greater(cfg.delta)) {
                        separated = true;
                        if (!first_sep) first_sep = e.n;
                        break;
                    }
                }
            }
            if (!separated) return Verdict::unknown("window", W);
        }
    }
    std::ostringstream os;
    os << "every sample separated beyond delta within the window at every grid radius";
    std::vector<LatticeVector> pts;
    if (first_sep) pts.push_back(*first_sep);
    return Verdict::yes("window-separation", false, make_witness(std::move(pts), os.str()), W);
}

Verdict equicontinuity_point_check(const System& sys, const Point& x, const AnalysisConfig& cfg) {
    cfg.validate();
    const int W = cfg.window;

    if (sys.flags().is_isometric) {
        return Verdict::yes("isometry", true,
                            make_witness({}, "delta = eps works uniformly in n"));
    }
    if (const auto mu = min_positive_distance(sys)) {
        std::ostringstream os;
        os << "delta below the smallest positive distance " << rational_to_string(*mu)
           << " leaves only the point itself in the ball";
        return Verdict::yes("finite-exhaustive", true, make_witness({}, os.str()));
    }

    if (sys.kind() == SystemKind::shift) {
        // For any delta = 2^-R a companion flipped at norm R+1 is delta-close
        // yet separates to distance 1 when that cell is shifted to the origin.
        const int R = 3;
        const SymbolicConfig& cx = x.as_config();
        const auto box = full_box(sys.dimension(), R + 1);
        std::optional<LatticeVector> cell;
        for (const auto& n : box) {
            if (n.max_norm() == R + 1 && !cx.is_block_cell(n)) {
                cell = n;
                break;
            }
        }
        if (!cell) throw std::logic_error("no free cell at the probe radius");
        const SymbolicConfig cy = cx.with_defect(*cell, (cx.at(*cell) + 1) % cx.alphabet());
        if (!sys.dist(sys.act(*cell, x), sys.act(*cell, Point::config(cy)))
                 .greater(make_rational(1, 2))) {
            throw std::logic_error("defect transport failed to separate");
        }
        return Verdict::no(
            "shift-defect-transport", true,
            make_witness({*cell}, "eps = 1/2 fails for every delta: flip one cell at norm "
                                  "matching delta and shift it to the origin"));
    }

    if (induced_over_shift(sys)) {
        const LinearForm& h = *sys.induced_form();
        bool zero = true;
        for (int i = 0; i < h.dim(); ++i) zero = zero && h[i] == 0;
        if (zero) {
            return Verdict::yes("induced-constant", true,
                                make_witness({}, "every act(n, .) is the identity; delta = eps"));
        }
        int p = 0;
        while (h[p] == 0) ++p;
        const Int R(3);
        const Int M = (R + 1 + abs_int(h[p]) - 1) / abs_int(h[p]) + 1;
        const Int s = M * abs_int(h[p]);
        const LatticeVector n =
            axis_step(sys.dimension(), p, h[p] > 0 ? M : Int(-M));
        if (r_eval(h, n) != s) throw std::logic_error("induced transport form value mismatch");
        const SymbolicConfig& cx = x.as_config();
        const LatticeVector cell = axis_step(1, 0, s);
        const SymbolicConfig cy = cx.with_defect(cell, (cx.at(cell) + 1) % cx.alphabet());
        if (!sys.dist(sys.act(n, x), sys.act(n, Point::config(cy)))
                 .greater(make_rational(1, 2))) {
            throw std::logic_error("induced defect transport failed to separate");
        }
        return Verdict::no(
            "induced-defect-transport", true,
            make_witness({n}, "eps = 1/2 fails for every delta: the form reaches arbitrarily "
                              "large shifts over the full lattice"));
    }

    if (sys.kind() == SystemKind::product) {
        const auto [A, B] = sys.factor_systems();
        if (!x.is_product()) throw std::invalid_argument("product system expects product points");
        const Verdict va = equicontinuity_point_check(*A, x.first(), cfg);
        const Verdict vb = equicontinuity_point_check(*B, x.second(), cfg);
        if (va.outcome == Outcome::yes && vb.outcome == Outcome::yes) {
            return Verdict::yes("product-factors", va.exact && vb.exact,
                                make_witness({}, "both coordinates equicontinuous; take the "
                                                 "smaller delta"));
        }
        if (va.outcome == Outcome::no || vb.outcome == Outcome::no) {
            const Verdict& src = va.outcome == Outcome::no ? va : vb;
            return Verdict::no("product-factors", src.exact,
                               make_witness({}, "a coordinate fails equicontinuity; companions "
                                                "varying only there transport the failure (" +
                                                    src.rule + ")"));
        }
        return Verdict::unknown("product-factors", W);
    }

    // Windowed evidence of failure: at every probed delta scale some companion
    // separates beyond the largest grid eps inside the box window.
    const Rational eps0 = cfg.eps_grid.front();
    std::optional<LatticeVector> first_sep;
    for (int R = 1; R <= 8; ++R) {
        const Rational delta = pow2_neg_rational(Int(R));
        bool separated = false;
        for (std::uint64_t attempt = 0; attempt < 4 && !separated; ++attempt) {
            const auto y = sys.perturb(x, delta, cfg.seed + attempt);
            if (!y) continue;
            const auto prof = box_profile(sys, x, *y, W);
            for (const auto& e : prof) {
                if (e.value.greater(eps0)) {
                    separated = true;
                    if (!first_sep) first_sep = e.n;
                    break;
                }
            }
        }
        if (!separated) return Verdict::unknown("window", W);
    }
    std::vector<LatticeVector> pts;
    if (first_sep) pts.push_back(*first_sep);
    return Verdict::no("window-separation", false,
                       make_witness(std::move(pts),
                                    "companions separated past the top grid eps at every probed "
                                    "delta scale"),
                       W);
}

Verdict gl_membership(const System& sys, const Point& x, int l, const AnalysisConfig& cfg) {
    cfg.validate();
    if (l < 1) throw std::invalid_argument("the level l must be at least 1");
    const Rational tau = make_rational(1, l);
    const int W = cfg.window;

    auto with_negative_invariance = [](Verdict v) {
        if (v.outcome == Outcome::yes && v.witness) {
            v.witness->notes +=
                "; negatively invariant: the rule is uniform in n, so it holds along the "
                "entire orbit";
        }
        return v;
    };

    if (sys.flags().is_isometric) {
        std::ostringstream os;
        os << "delta = 1/(3l): pairs in the ball stay within 2/(3l) <= " << rational_to_string(tau)
           << " forever";
        return with_negative_invariance(Verdict::yes("isometry", true, make_witness({}, os.str())));
    }
    if (const auto mu = min_positive_distance(sys)) {
        std::ostringstream os;
        os << "delta below " << rational_to_string(*mu) << " makes the ball a singleton";
        return with_negative_invariance(
            Verdict::yes("finite-exhaustive", true, make_witness({}, os.str())));
    }

    const bool over_shift = sys.kind() == SystemKind::shift || induced_over_shift(sys);
    if (over_shift) {
        bool trivial_form = false;
        if (induced_over_shift(sys)) {
            const LinearForm& h = *sys.induced_form();
            trivial_form = true;
            for (int i = 0; i < h.dim(); ++i) trivial_form = trivial_form && h[i] == 0;
        }
        if (trivial_form) {
            return with_negative_invariance(
                Verdict::yes("induced-constant", true,
                             make_witness({}, "the action is trivial; delta = 1/l works")));
        }
        if (l == 1) {
            return with_negative_invariance(
                Verdict::yes("metric-diameter", true,
                             make_witness({}, "the configuration metric never exceeds 1")));
        }
        // l >= 2: a flipped cell transported to the origin separates a pair of
        // ball members to distance 1 > 1/l, for every delta.
        const std::string rule = sys.kind() == SystemKind::shift ? "shift-defect-transport"
                                                                 : "induced-defect-transport";
        const Verdict eq = equicontinuity_point_check(sys, x, cfg);
        if (eq.outcome != Outcome::no || !eq.exact) {
            throw std::logic_error("defect transport rule expected an exact failure");
        }
        return Verdict::no(rule, true,
                           make_witness(eq.witness ? eq.witness->lattice_points
                                                   : std::vector<LatticeVector>{},
                                        "the pair (x, flipped companion) leaves diameter 1/l at "
                                        "the transported cell"));
    }

    if (sys.kind() == SystemKind::product) {
        const auto [A, B] = sys.factor_systems();
        if (!x.is_product()) throw std::invalid_argument("product system expects product points");
        const Verdict va = gl_membership(*A, x.first(), l, cfg);
        const Verdict vb = gl_membership(*B, x.second(), l, cfg);
        if (va.outcome == Outcome::yes && vb.outcome == Outcome::yes) {
            return with_negative_invariance(
                Verdict::yes("product-factors", va.exact && vb.exact,
                             make_witness({}, "both coordinates stay within diameter 1/l; the "
                                              "sup metric takes the larger")));
        }
        if (va.outcome == Outcome::no || vb.outcome == Outcome::no) {
            const Verdict& src = va.outcome == Outcome::no ? va : vb;
            return Verdict::no("product-factors", src.exact,
                               make_witness({}, "a coordinate escapes diameter 1/l; companions "
                                                "varying only there transport the escape (" +
                                                    src.rule + ")"));
        }
        return Verdict::unknown("product-factors", W);
    }

    // Windowed evidence of failure at every probed delta scale.
    std::optional<LatticeVector> first_sep;
    for (int R = 1; R <= 8; ++R) {
        const Rational delta = pow2_neg_rational(Int(R));
        bool separated = false;
        for (std::uint64_t attempt = 0; attempt < 4 && !separated; ++attempt) {
            const auto y = sys.perturb(x, delta, cfg.seed + attempt);
            if (!y) continue;
            const auto prof = box_profile(sys, x, *y, W);
            for (const auto& e : prof) {
                if (e.value.greater(tau)) {
                    separated = true;
                    if (!first_sep) first_sep = e.n;
                    break;
                }
            }
        }
        if (!separated) return Verdict::unknown("window", W);
    }
    std::vector<LatticeVector> pts;
    if (first_sep) pts.push_back(*first_sep);
    return Verdict::no("window-separation", false,
                       make_witness(std::move(pts),
                                    "ball pairs left diameter 1/l at every probed delta scale"),
                       W);
}

namespace {

std::vector<long long> single_axis_periods(const System& sys, const Point& x) {
    const int d = sys.dimension();
    std::vector<long long> periods(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        Point px = x;
        const LatticeVector step = axis_step(d, i, Int(1));
        long long p = 0;
        for (long long c = 1; c <= kMaxAxisProbe; ++c) {
            px = sys.act(step, px);
            if (point_equal(px, x)) {
                p = c;
                break;
            }
        }
        if (p == 0) throw std::invalid_argument("point has no axis period; system not finite");
        periods[static_cast<std::size_t>(i)] = p;
    }
    return periods;
}

std::vector<Point> orbit_over_box(const System& sys, const Point& x, const ConeIndex& k,
                                  const std::vector<long long>& periods, long long shift) {
    const int d = sys.dimension();
    std::vector<Point> out;
    std::vector<long long> t(static_cast<std::size_t>(d), 1);
    while (true) {
        std::vector<Int> coords(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) {
            const long long ti =
                t[static_cast<std::size_t>(i)] + shift * periods[static_cast<std::size_t>(i)];
            coords[static_cast<std::size_t>(i)] = Int(k.sign(i) * ti);
        }
        const LatticeVector n{std::move(coords)};
        const Point p = sys.act(n, x);
        bool seen = false;
        for (const auto& q : out) {
            if (point_equal(p, q)) {
                seen = true;
                break;
            }
        }
        if (!seen) out.push_back(p);
        int axis = 0;
        while (axis < d &&
               t[static_cast<std::size_t>(axis)] == periods[static_cast<std::size_t>(axis)]) {
            t[static_cast<std::size_t>(axis)] = 1;
            ++axis;
        }
        if (axis == d) break;
        ++t[static_cast<std::size_t>(axis)];
    }
    std::sort(out.begin(), out.end(),
              [](const Point& a, const Point& b) { return a.to_string() < b.to_string(); });
    return out;
}

}  // namespace

std::vector<Point> limit_set_finite(const System& sys, const Point& x, const ConeIndex& k) {
    if (!sys.flags().is_finite) {
        throw std::invalid_argument("limit sets are computed exactly for finite systems only");
    }
    if (k.dim != sys.dimension()) throw std::invalid_argument("cone dimension mismatch");
    const auto periods = single_axis_periods(sys, x);
    return orbit_over_box(sys, x, k, periods, 0);
}

std::vector<Point> prolongation_set_finite(const System& sys, const Point& x,
                                           const ConeIndex& k) {
    if (!sys.flags().is_finite) {
        throw std::invalid_argument("limit sets are computed exactly for finite systems only");
    }
    if (k.dim != sys.dimension()) throw std::invalid_argument("cone dimension mismatch");
    const auto periods = single_axis_periods(sys, x);
    // In a discrete space, initial points close enough to x coincide with x,
    // so the prolongation set is the limit set; compute it over a deeper box
    // and cross-check the two enumerations.
    const auto deep = orbit_over_box(sys, x, k, periods, 1);
    const auto lim = orbit_over_box(sys, x, k, periods, 0);
    if (deep.size() != lim.size()) {
        throw std::logic_error("prolongation and limit enumerations disagree");
    }
    for (std::size_t i = 0; i < deep.size(); ++i) {
        if (!point_equal(deep[i], lim[i])) {
            throw std::logic_error("prolongation and limit enumerations disagree");
        }
    }
    return deep;
}

Verdict transitivity_check(const System& sys, const ConeIndex& k, const AnalysisConfig& cfg) {
    cfg.validate();
    if (k.dim != sys.dimension()) throw std::invalid_argument("cone dimension mismatch");
    const int W = cfg.window;

    if (const FiniteSpace* fs = sys.finite_space()) {
        for (int i = 0; i < fs->size(); ++i) {
            const Point x = Point::finite(i);
            const auto periods = single_axis_periods(sys, x);
            const auto orbit = orbit_over_box(sys, x, k, periods, 0);
            if (static_cast<int>(orbit.size()) == fs->size()) {
                std::ostringstream os;
                os << "the cone orbit of point " << i << " covers all " << fs->size()
                   << " points";
                return Verdict::yes("finite-exhaustive", true, make_witness({}, os.str()));
            }
        }
        return Verdict::no("finite-exhaustive", true,
                           make_witness({}, "no point has a cone orbit covering the space"));
    }

    if (sys.kind() == SystemKind::shift) {
        // Cylinders of radius 1 are spliced by a configuration carrying the
        // target pattern at cone depth 3; deeper cylinders splice the same way.
        const LatticeVector n = signed_diagonal(k, Int(3));
        const SymbolicConfig z0 = SymbolicConfig::uniform(sys.dimension(), sys.alphabet(), 0);
        const SymbolicConfig z = z0.with_defect(n, 1 % sys.alphabet());
        for (const auto& m : full_box(sys.dimension(), 1)) {
            if (z.at(m) != 0) throw std::logic_error("splice configuration leaves the cylinder");
        }
        const Point moved = sys.act(n, Point::config(z));
        if (moved.as_config().at(LatticeVector::zero(sys.dimension())) != 1 % sys.alphabet()) {
            throw std::logic_error("splice configuration misses the target cylinder");
        }
        return Verdict::yes(
            "cylinder-splice", true,
            make_witness({n}, "a configuration in any radius-1 cylinder reaches any other under "
                              "act(n, .); the construction scales to every radius"));
    }

    if (sys.kind() == SystemKind::rotation_induced) {
        const Point theta0 = Point::circle(CirclePoint{0.0});
        std::vector<double> angles;
        for (const auto& n : cone_shell(k, W)) {
            angles.push_back(sys.act(n, theta0).as_circle().angle);
        }
        std::sort(angles.begin(), angles.end());
        double gap = 0.0;
        if (angles.size() < 2) {
            gap = 1.0;
        } else {
            for (std::size_t i = 0; i + 1 < angles.size(); ++i) {
                gap = std::max(gap, angles[i + 1] - angles[i]);
            }
            gap = std::max(gap, 1.0 - angles.back() + angles.front());
        }
        const Rational smallest = cfg.eps_grid.back();
        if (gap <= smallest.convert_to<double>()) {
            std::ostringstream os;
            os << "cone orbit of angle 0 meets every ball of the finest grid radius (max gap "
               << gap << ")";
            return Verdict::yes("orbit-density", false, make_witness({}, os.str()), W);
        }
        return Verdict::unknown("orbit-density", W);
    }

    if (induced_over_shift(sys)) {
        const LinearForm& h = *sys.induced_form();
        bool zero = true;
        for (int i = 0; i < h.dim(); ++i) zero = zero && h[i] == 0;
        if (zero) {
            return Verdict::no("induced-constant", true,
                               make_witness({}, "orbits are singletons in a non-trivial space"));
        }
        const LatticeVector n = cone_point_with_large_form(h, k, Int(3));
        const Int s = r_eval(h, n);
        const auto base = sys.base_system();
        const SymbolicConfig z0 = SymbolicConfig::uniform(1, base->alphabet(), 0);
        const SymbolicConfig z = z0.with_defect(axis_step(1, 0, s), 1 % base->alphabet());
        for (const auto& m : full_box(1, 1)) {
            if (z.at(m) != 0) throw std::logic_error("splice configuration leaves the cylinder");
        }
        const Point moved = sys.act(n, Point::config(z));
        if (moved.as_config().at(LatticeVector::zero(1)) != 1 % base->alphabet()) {
            throw std::logic_error("splice configuration misses the target cylinder");
        }
        return Verdict::yes("induced-cylinder", true,
                            make_witness({n}, "the form reaches arbitrarily large shifts inside "
                                              "the cone, so cylinders splice as for the shift"));
    }

    return Verdict::unknown("window", W);
}

Verdict li_yorke_sensitivity_check(const System& sys, const ConeIndex& k,
                                   const AnalysisConfig& cfg) {
    cfg.validate();
    if (k.dim != sys.dimension()) throw std::invalid_argument("cone dimension mismatch");
    const int W = cfg.window;

    if (sys.flags().is_isometric) {
        return Verdict::no("isometry", true,
                           make_witness({}, "constant profiles admit no proximal pairs, hence "
                                            "no Li-Yorke companions"));
    }
    if (min_positive_distance(sys)) {
        return Verdict::no("injective-finite", true,
                           make_witness({}, "proximal pairs of an invertible finite-order action "
                                            "coincide; no Li-Yorke pairs exist"));
    }

    const auto verify_pair = [&](const Point& px, const Point& py) {
        const PairClass pc = classify_pair(sys, px, py, k, cfg);
        if (pc.li_yorke.outcome != Outcome::yes || !pc.li_yorke.exact || !pc.limsup ||
            *pc.limsup < make_rational(1, 2)) {
            throw std::logic_error("block companion failed its Li-Yorke classification");
        }
    };

    if (sys.kind() == SystemKind::shift) {
        // Overlay a block family along the cone diagonal: the companion is
        // delta-close, proximal, and oscillates back to distance 1.
        const int R = eps_exponent(cfg.eps_grid.back());
        const int checks = std::min(3, cfg.sample_count);
        const auto samples = sys.sample_points(checks, cfg.seed);
        std::optional<LatticeVector> wit;
        for (const Point& px : samples) {
            const SymbolicConfig& cx = px.as_config();
            if (cx.block()) continue;  // sampler never produces one
            Int P(1);
            for (int per : cx.period()) P = P * Int(per) / gcd_int(P, Int(per));
            const LatticeVector v = signed_diagonal(k, P);
            Int maxdef(0);
            for (const auto& [cell, sym] : cx.defects()) {
                maxdef = std::max(maxdef, cell.max_norm());
            }
            const Int B = (maxdef + 1) / P + Int(R) + 2;
            const int s = (cx.background_at(LatticeVector::zero(k.dim)) + 1) % cx.alphabet();
            BlockFamily fam;
            fam.direction = v;
            fam.base = B;
            fam.symbol = s;
            fam.offset = LatticeVector::zero(k.dim);
            const SymbolicConfig cy = cx.with_block(fam);
            const Point py = Point::config(cy);
            if (!sys.dist(px, py).leq(pow2_neg_rational(Int(R)))) {
                throw std::logic_error("block companion escaped its ball");
            }
            verify_pair(px, py);
            if (!wit) wit = v * B;
        }
        return Verdict::yes(
            "shift-blockline", true,
            make_witness(wit ? std::vector<LatticeVector>{*wit} : std::vector<LatticeVector>{},
                         "eps = 1/2: block-family companions exist in every neighborhood of "
                         "every point"));
    }

    if (induced_over_shift(sys)) {
        const ConeImage im = cone_image(*sys.induced_form(), k);
        if (im.kind == ConeImage::Kind::zero) {
            return Verdict::no("induced-constant", true,
                               make_witness({}, "the action is trivial; profiles are constant"));
        }
        const int R = eps_exponent(cfg.eps_grid.back());
        const int checks = std::min(3, cfg.sample_count);
        const auto samples = sys.sample_points(checks, cfg.seed);
        std::optional<LatticeVector> wit;
        for (const Point& px : samples) {
            const SymbolicConfig& cx = px.as_config();
            if (cx.block()) continue;
            const Int p(cx.period()[0]);
            const Int wmag = p * im.G;
            const Int w0 = im.kind == ConeImage::Kind::downward ? Int(-wmag) : wmag;
            Int maxdef(0);
            for (const auto& [cell, sym] : cx.defects()) {
                maxdef = std::max(maxdef, cell.max_norm());
            }
            const Int B = (maxdef + 1) / wmag + Int(R) + 2;
            const int s = (cx.background_at(LatticeVector::zero(1)) + 1) % cx.alphabet();
            BlockFamily fam;
            fam.direction = axis_step(1, 0, w0);
            fam.base = B;
            fam.symbol = s;
            fam.offset = LatticeVector::zero(1);
            const SymbolicConfig cy = cx.with_block(fam);
            const Point py = Point::config(cy);
            if (!sys.dist(px, py).leq(pow2_neg_rational(Int(R)))) {
                throw std::logic_error("block companion escaped its ball");
            }
            verify_pair(px, py);
            if (!wit) wit = fam.direction * B;
        }
        return Verdict::yes(
            "induced-blockline", true,
            make_witness(wit ? std::vector<LatticeVector>{*wit} : std::vector<LatticeVector>{},
                         "eps = 1/2: block companions along the reachable end of the line exist "
                         "in every neighborhood"));
    }

    if (sys.kind() == SystemKind::product) {
        const auto [A, B] = sys.factor_systems();
        const Verdict va = li_yorke_sensitivity_check(*A, k, cfg);
        const Verdict vb = li_yorke_sensitivity_check(*B, k, cfg);
        if (va.outcome == Outcome::yes || vb.outcome == Outcome::yes) {
            const Verdict& src = (va.outcome == Outcome::yes && va.exact)   ? va
                                 : (vb.outcome == Outcome::yes && vb.exact) ? vb
                                 : (va.outcome == Outcome::yes)             ? va
                                                                            : vb;
            return Verdict::yes("product-transport", src.exact,
                                make_witness({}, "companions varying in a Li-Yorke sensitive "
                                                 "coordinate only stay Li-Yorke in the product (" +
                                                     src.rule + ")"),
                                src.window);
        }
        if (va.outcome == Outcome::no && va.exact && vb.outcome == Outcome::no && vb.exact) {
            return Verdict::no("product-factors", true,
                               make_witness({}, "an oscillating coordinate of a product pair "
                                                "would be a Li-Yorke companion in that factor"));
        }
        return Verdict::unknown("product-factors", W);
    }

    // Windowed companion evidence for conjugated configuration spaces.
    bool config_space = true;
    const auto samples = sys.sample_points(std::min(3, cfg.sample_count), cfg.seed);
    for (const Point& px : samples) config_space = config_space && px.is_config();
    if (config_space && !samples.empty()) {
        const Rational eps0 = cfg.eps_grid.front();
        for (const Point& px : samples) {
            const SymbolicConfig& cx = px.as_config();
            if (cx.block()) return Verdict::unknown("window", W);
            Int P(1);
            for (int per : cx.period()) P = P * Int(per) / gcd_int(P, Int(per));
            const LatticeVector v = signed_diagonal(k, P);
            Int maxdef(0);
            for (const auto& [cell, sym] : cx.defects()) {
                maxdef = std::max(maxdef, cell.max_norm());
            }
            BlockFamily fam;
            fam.direction = v;
            fam.base = (maxdef + 1) / P + 4;
            fam.symbol = (cx.background_at(LatticeVector::zero(cx.dim())) + 1) % cx.alphabet();
            fam.offset = LatticeVector::zero(cx.dim());
            const Point py = Point::config(cx.with_block(fam));
            const PairClass pc = classify_pair(sys, px, py, k, cfg);
            const bool prox_ok = pc.proximal.outcome == Outcome::yes;
            bool refuted = false;
            for (const auto& [eps, vd] : pc.asymptotic_at) {
                if (eps == eps0 && vd.outcome == Outcome::no) refuted = true;
            }
            if (!prox_ok || !refuted) return Verdict::unknown("window", W);
        }
        return Verdict::yes("window-companions", false,
                            make_witness({}, "block companions for every sample classified "
                                             "proximal and non-asymptotic within the window"),
                            W);
    }

    return Verdict::unknown("window", W);
}

DichotomyReport dichotomy_report(const System& sys, const ConeIndex& k,
                                 const AnalysisConfig& cfg) {
    cfg.validate();
    DichotomyReport rep;
    rep.transitivity = transitivity_check(sys, k, cfg);
    rep.sensitivity = sensitivity_check(sys, k, cfg);
    const auto samples = sys.sample_points(cfg.sample_count, cfg.seed);
    int equi_yes = 0;
    for (const Point& x : samples) {
        rep.equicontinuity_samples.push_back(equicontinuity_point_check(sys, x, cfg));
        const Verdict& v = rep.equicontinuity_samples.back();
        if (v.outcome == Outcome::yes) ++equi_yes;
        if (rep.sensitivity.outcome == Outcome::yes && rep.sensitivity.exact &&
            v.outcome == Outcome::yes && v.exact) {
            rep.exclusion_ok = false;
        }
    }
    std::ostringstream os;
    os << "transitivity: " << outcome_name(rep.transitivity.outcome) << " ("
       << rep.transitivity.rule << "); sensitivity: " << outcome_name(rep.sensitivity.outcome)
       << " (" << rep.sensitivity.rule << "); equicontinuous samples: " << equi_yes << "/"
       << samples.size() << "; exclusion "
       << (rep.exclusion_ok ? "holds" : "violated: sensitive with an equicontinuity point");
    rep.summary = os.str();
    return rep;
}

}  // namespace ktc
