#include "ktc/system.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ktc {

const char* system_kind_name(SystemKind kind) {
    switch (kind) {
        case SystemKind::finite: return "finite";
        case SystemKind::shift: return "shift";
        case SystemKind::rotation_induced: return "rotation-induced";
        case SystemKind::product: return "product";
        case SystemKind::conjugate: return "conjugate";
        case SystemKind::induced: return "induced";
    }
    return "unknown";
}

System::System(SystemKind kind, int dim, SystemFlags flags, std::string name)
    : kind_(kind), dim_(dim), flags_(flags), name_(std::move(name)) {
    if (dim_ < 1) throw std::invalid_argument("system dimension must be positive");
}

void System::check_dim(const LatticeVector& n) const {
    if (n.dim() != dim_)
        throw std::invalid_argument("lattice vector dimension " + std::to_string(n.dim()) +
                                    " does not match system dimension " + std::to_string(dim_));
}

std::optional<Point> System::perturb(const Point&, const Rational&, std::uint64_t) const {
    return std::nullopt;
}

SymbolicConfig sample_config(int dim, int alphabet, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<int> period_pick(1, 2);
    std::uniform_int_distribution<int> symbol_pick(0, alphabet - 1);

    std::vector<int> period(static_cast<std::size_t>(dim));
    int cells = 1;
    for (auto& p : period) {
        p = period_pick(gen);
        cells *= p;
    }
    std::vector<int> background(static_cast<std::size_t>(cells));
    for (auto& s : background) s = symbol_pick(gen);

    std::uniform_int_distribution<int> defect_count_pick(0, 3);
    std::uniform_int_distribution<int> coord_pick(-3, 3);
    std::map<LatticeVector, int> defects;
    const int defect_count = defect_count_pick(gen);
    for (int i = 0; i < defect_count; ++i) {
        std::vector<Int> coords(static_cast<std::size_t>(dim));
        for (auto& c : coords) c = coord_pick(gen);
        defects[LatticeVector(std::move(coords))] = symbol_pick(gen);
    }
    return SymbolicConfig(alphabet, std::move(period), std::move(background), std::move(defects));
}

namespace {

std::uint64_t sub_seed(std::mt19937_64& gen) { return gen(); }

class FiniteSystem final : public System {
public:
    FiniteSystem(FiniteSpace space, std::vector<Permutation> gens)
        : System(SystemKind::finite, static_cast<int>(gens.size()),
                 SystemFlags{true, false, false},
                 "finite(" + std::to_string(space.size()) + " points, d=" +
                     std::to_string(gens.size()) + ")"),
          space_(std::move(space)),
          gens_(std::move(gens)) {
        for (const auto& g : gens_) {
            if (g.size() != space_.size())
                throw std::invalid_argument("generator acts on " + std::to_string(g.size()) +
                                            " points, space has " +
                                            std::to_string(space_.size()));
        }
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            for (std::size_t j = i + 1; j < gens_.size(); ++j) {
                if (!gens_[i].commutes_with(gens_[j]))
                    throw std::invalid_argument("generators " + std::to_string(i) + " and " +
                                                std::to_string(j) + " do not commute");
            }
        }
    }

    Point act(const LatticeVector& n, const Point& x) const override {
        check_dim(n);
        int p = x.as_finite();
        if (p < 0 || p >= space_.size())
            throw std::invalid_argument("finite point index out of range");
        for (int i = 0; i < dimension(); ++i)
            p = gens_[static_cast<std::size_t>(i)].power_apply(n[i], p);
        return Point::finite(p);
    }

    Dist dist(const Point& a, const Point& b) const override {
        return Dist::from_rational(space_.metric(a.as_finite(), b.as_finite()));
    }

    std::vector<Point> sample_points(int count, std::uint64_t seed) const override {
        std::mt19937_64 gen(seed);
        std::uniform_int_distribution<int> pick(0, space_.size() - 1);
        std::vector<Point> out;
        out.reserve(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i) out.push_back(Point::finite(pick(gen)));
        return out;
    }

    std::optional<Point> perturb(const Point& x, const Rational& radius,
                                 std::uint64_t seed) const override {
        const int p = x.as_finite();
        const int n = space_.size();
        std::mt19937_64 gen(seed);
        const int start = std::uniform_int_distribution<int>(0, n - 1)(gen);
        for (int step = 0; step < n; ++step) {
            const int q = (start + step) % n;
            if (q != p && space_.metric(p, q) <= radius) return Point::finite(q);
        }
        return std::nullopt;
    }

    const FiniteSpace* finite_space() const override { return &space_; }
    const std::vector<Permutation>* generators() const override { return &gens_; }

private:
    FiniteSpace space_;
    std::vector<Permutation> gens_;
};

class ShiftSystem final : public System {
public:
    ShiftSystem(int dim, int alphabet)
        : System(SystemKind::shift, dim, SystemFlags{false, false, true},
                 "shift(d=" + std::to_string(dim) + ", q=" + std::to_string(alphabet) + ")"),
          alphabet_(alphabet) {
        if (alphabet_ < 2) throw std::invalid_argument("shift alphabet needs at least 2 symbols");
    }

    Point act(const LatticeVector& n, const Point& x) const override {
        check_dim(n);
        const SymbolicConfig& c = x.as_config();
        check_config(c);
        return Point::config(c.translated(n));
    }

    Dist dist(const Point& a, const Point& b) const override {
        const SymbolicConfig& ca = a.as_config();
        const SymbolicConfig& cb = b.as_config();
        check_config(ca);
        check_config(cb);
        return Dist::from_dyadic(symbolic_distance(ca, cb));
    }

    std::vector<Point> sample_points(int count, std::uint64_t seed) const override {
        std::mt19937_64 gen(seed);
        std::vector<Point> out;
        out.reserve(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i)
            out.push_back(Point::config(sample_config(dimension(), alphabet_, sub_seed(gen))));
        return out;
    }

    std::optional<Point> perturb(const Point& x, const Rational& radius,
                                 std::uint64_t seed) const override {
        if (radius <= 0) return std::nullopt;
        const SymbolicConfig& c = x.as_config();
        check_config(c);
        // Smallest R with 2^-R <= radius; flipping one symbol at max-norm R
        // then gives distance exactly 2^-R.
        int R = 0;
        while (R <= 128 && Dyadic::pow2_neg(R).to_rational() > radius) ++R;
        if (R > 128) return std::nullopt;
        std::mt19937_64 gen(seed);
        for (int attempt = 0; attempt < 64; ++attempt, ++R) {
            std::vector<LatticeVector> shell;
            for (const auto& m : full_box(dimension(), R))
                if (m.max_norm() == R) shell.push_back(m);
            if (shell.empty()) continue;
            const std::size_t start =
                std::uniform_int_distribution<std::size_t>(0, shell.size() - 1)(gen);
            for (std::size_t step = 0; step < shell.size(); ++step) {
                const LatticeVector& m = shell[(start + step) % shell.size()];
                if (c.is_block_cell(m)) continue;
                const int flipped = (c.at(m) + 1) % alphabet_;
                return Point::config(c.with_defect(m, flipped));
            }
        }
        return std::nullopt;
    }

    int alphabet() const override { return alphabet_; }

private:
    int alphabet_;

    void check_config(const SymbolicConfig& c) const {
        if (c.dim() != dimension() || c.alphabet() != alphabet_)
            throw std::invalid_argument("configuration does not belong to this shift space");
    }
};

class RotationInducedSystem final : public System {
public:
    RotationInducedSystem(double alpha, LinearForm h)
        : System(SystemKind::rotation_induced, h.dim(), SystemFlags{false, true, false},
                 make_name(alpha, h)),
          alpha_(alpha),
          h_(std::move(h)) {
        if (!(alpha_ > 0.0 && alpha_ < 1.0))
            throw std::invalid_argument("rotation angle must lie strictly between 0 and 1");
    }

    Point act(const LatticeVector& n, const Point& x) const override {
        check_dim(n);
        const Int r = r_eval(h_, n);
        const double steps = static_cast<double>(to_int64(r));
        return Point::circle(CirclePoint::wrap(x.as_circle().angle + steps * alpha_));
    }

    Dist dist(const Point& a, const Point& b) const override {
        return Dist::from_double(circle_distance(a.as_circle(), b.as_circle()));
    }

    std::vector<Point> sample_points(int count, std::uint64_t seed) const override {
        std::mt19937_64 gen(seed);
        std::uniform_real_distribution<double> pick(0.0, 1.0);
        std::vector<Point> out;
        out.reserve(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i) out.push_back(Point::circle(CirclePoint::wrap(pick(gen))));
        return out;
    }

    std::optional<Point> perturb(const Point& x, const Rational& radius,
                                 std::uint64_t) const override {
        const double r = radius.convert_to<double>();
        const double offset = std::min(r, 0.49) * 0.5;
        if (offset <= 0.0) return std::nullopt;
        return Point::circle(CirclePoint::wrap(x.as_circle().angle + offset));
    }

    const LinearForm* induced_form() const override { return &h_; }

private:
    double alpha_;
    LinearForm h_;

    static std::string make_name(double alpha, const LinearForm& h) {
        std::ostringstream os;
        os.precision(10);
        os << "rotation(alpha=" << alpha << ", h=" << h.to_string() << ")";
        return os.str();
    }
};

class ProductSystem final : public System {
public:
    ProductSystem(SystemHandle a, SystemHandle b)
        : System(SystemKind::product, a->dimension(),
                 SystemFlags{a->flags().is_finite && b->flags().is_finite,
                             a->flags().is_isometric && b->flags().is_isometric, false},
                 "product(" + a->name() + ", " + b->name() + ")"),
          a_(std::move(a)),
          b_(std::move(b)) {
        if (a_->dimension() != b_->dimension())
            throw std::invalid_argument("product factors must share the lattice dimension");
    }

    Point act(const LatticeVector& n, const Point& x) const override {
        check_dim(n);
        return Point::product(a_->act(n, x.first()), b_->act(n, x.second()));
    }

    Dist dist(const Point& x, const Point& y) const override {
        return sup_combine(a_->dist(x.first(), y.first()), b_->dist(x.second(), y.second()));
    }

    std::vector<Point> sample_points(int count, std::uint64_t seed) const override {
        std::mt19937_64 gen(seed);
        const auto left = a_->sample_points(count, sub_seed(gen));
        const auto right = b_->sample_points(count, sub_seed(gen));
        std::vector<Point> out;
        out.reserve(static_cast<std::size_t>(count));
        for (int i = 0; i < count; ++i)
            out.push_back(Point::product(left[static_cast<std::size_t>(i)],
                                         right[static_cast<std::size_t>(i)]));
        return out;
    }

    std::optional<Point> perturb(const Point& x, const Rational& radius,
                                 std::uint64_t seed) const override {
        // Moving one coordinate within `radius` moves the pair the same sup
        // distance; the other coordinate stays fixed.
        if (auto moved = a_->perturb(x.first(), radius, seed))
            return Point::product(std::move(*moved), x.second());
        if (auto moved = b_->perturb(x.second(), radius, seed))
            return Point::product(x.first(), std::move(*moved));
        return std::nullopt;
    }

    std::pair<SystemHandle, SystemHandle> factor_systems() const override { return {a_, b_}; }

private:
    SystemHandle a_, b_;
};

class ConjugateSystem final : public System {
public:
    ConjugateSystem(SystemHandle base, PointMap fwd, PointMap inv, int check_samples,
                    std::uint64_t seed)
        : System(SystemKind::conjugate, base->dimension(),
                 SystemFlags{base->flags().is_finite, false, false},
                 "conjugate(" + base->name() + ")"),
          base_(std::move(base)),
          fwd_(std::move(fwd)),
          inv_(std::move(inv)) {
        for (const Point& x : base_->sample_points(check_samples, seed)) {
            if (!point_equal(inv_(fwd_(x)), x) || !point_equal(fwd_(inv_(x)), x))
                throw std::invalid_argument(
                    "conjugacy maps are not mutually inverse on sampled points");
        }
    }

    Point act(const LatticeVector& n, const Point& y) const override {
        check_dim(n);
        return fwd_(base_->act(n, inv_(y)));
    }

    Dist dist(const Point& a, const Point& b) const override { return base_->dist(a, b); }

    std::vector<Point> sample_points(int count, std::uint64_t seed) const override {
        std::vector<Point> out = base_->sample_points(count, seed);
        for (auto& p : out) p = fwd_(p);
        return out;
    }

    std::optional<Point> perturb(const Point& x, const Rational& radius,
                                 std::uint64_t seed) const override {
        return base_->perturb(x, radius, seed);
    }

    SystemHandle base_system() const override { return base_; }

private:
    SystemHandle base_;
    PointMap fwd_, inv_;
};

class InducedSystem final : public System {
public:
    InducedSystem(SystemHandle base, LinearForm h, int dim)
        : System(SystemKind::induced, dim,
                 SystemFlags{base->flags().is_finite, base->flags().is_isometric, false},
                 "induced(" + base->name() + ", h=" + h.to_string() + ")"),
          base_(std::move(base)),
          h_(std::move(h)) {
        if (base_->dimension() != 1)
            throw std::invalid_argument("induced actions need a one-dimensional base");
        if (h_.dim() != dim)
            throw std::invalid_argument("linear form dimension does not match the action");
    }

    Point act(const LatticeVector& n, const Point& x) const override {
        check_dim(n);
        return base_->act(LatticeVector({r_eval(h_, n)}), x);
    }

    Dist dist(const Point& a, const Point& b) const override { return base_->dist(a, b); }

    std::vector<Point> sample_points(int count, std::uint64_t seed) const override {
        return base_->sample_points(count, seed);
    }

    std::optional<Point> perturb(const Point& x, const Rational& radius,
                                 std::uint64_t seed) const override {
        return base_->perturb(x, radius, seed);
    }

    SystemHandle base_system() const override { return base_; }
    const LinearForm* induced_form() const override { return &h_; }

private:
    SystemHandle base_;
    LinearForm h_;
};

}  // namespace

SystemHandle make_finite(FiniteSpace space, std::vector<Permutation> generators) {
    return std::make_shared<FiniteSystem>(std::move(space), std::move(generators));
}

SystemHandle make_shift(int dim, int alphabet) {
    return std::make_shared<ShiftSystem>(dim, alphabet);
}

SystemHandle make_rotation_induced(double alpha, LinearForm h) {
    return std::make_shared<RotationInducedSystem>(alpha, std::move(h));
}

SystemHandle make_product(SystemHandle first, SystemHandle second) {
    if (!first || !second) throw std::invalid_argument("product factors must be non-null");
    return std::make_shared<ProductSystem>(std::move(first), std::move(second));
}

SystemHandle make_conjugate(SystemHandle base, PointMap forward, PointMap backward,
                            int check_samples, std::uint64_t seed) {
    if (!base) throw std::invalid_argument("conjugate base must be non-null");
    return std::make_shared<ConjugateSystem>(std::move(base), std::move(forward),
                                             std::move(backward), check_samples, seed);
}

SystemHandle make_induced(SystemHandle base, LinearForm h, int dim) {
    if (!base) throw std::invalid_argument("induced base must be non-null");
    return std::make_shared<InducedSystem>(std::move(base), std::move(h), dim);
}

Point symbol_swap(const Point& p) {
    const SymbolicConfig& c = p.as_config();
    const int q = c.alphabet();
    std::vector<int> bg = c.background();
    for (auto& s : bg) s = q - 1 - s;
    std::map<LatticeVector, int> defects;
    for (const auto& [cell, s] : c.defects()) defects[cell] = q - 1 - s;
    std::optional<BlockFamily> block = c.block();
    if (block) block->symbol = q - 1 - block->symbol;
    return Point::config(
        SymbolicConfig(q, c.period(), std::move(bg), std::move(defects), std::move(block)));
}

}  // namespace ktc
