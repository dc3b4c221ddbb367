#include "ktc/symbolic.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ktc {

namespace {

std::size_t box_size(const std::vector<int>& period) {
    std::size_t n = 1;
    for (int p : period) n *= static_cast<std::size_t>(p);
    return n;
}

// Row-major index of the residue of m in the period box.
std::size_t box_index(const std::vector<int>& period, const LatticeVector& m) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < period.size(); ++i) {
        const Int p(period[i]);
        Int r = m[static_cast<int>(i)] % p;
        if (r < 0) r += p;
        idx = idx * static_cast<std::size_t>(period[i]) + static_cast<std::size_t>(r);
    }
    return idx;
}

std::size_t box_index(const std::vector<int>& period, const std::vector<int>& cell) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < period.size(); ++i) {
        idx = idx * static_cast<std::size_t>(period[i]) + static_cast<std::size_t>(cell[i]);
    }
    return idx;
}

// Calls fn(cell) for every cell of the box [0,p_1) x ... x [0,p_d).
template <typename Fn>
void for_each_cell(const std::vector<int>& period, Fn&& fn) {
    std::vector<int> cell(period.size(), 0);
    while (true) {
        fn(cell);
        std::size_t i = period.size();
        while (i > 0) {
            --i;
            if (++cell[i] < period[i]) break;
            cell[i] = 0;
            if (i == 0) return;
        }
        if (period.empty()) return;
    }
}

// Smallest divisor period along each axis that reproduces the table.
void minimize_period(std::vector<int>& period, std::vector<int>& table) {
    for (std::size_t axis = 0; axis < period.size(); ++axis) {
        for (int q = 1; q < period[axis]; ++q) {
            if (period[axis] % q != 0) continue;
            bool ok = true;
            for_each_cell(period, [&](const std::vector<int>& cell) {
                if (!ok) return;
                std::vector<int> shifted(cell);
                shifted[axis] = (cell[axis] + q) % period[axis];
                if (table[box_index(period, cell)] != table[box_index(period, shifted)]) ok = false;
            });
            if (!ok) continue;
            std::vector<int> new_period(period);
            new_period[axis] = q;
            std::vector<int> new_table(box_size(new_period));
            for_each_cell(new_period, [&](const std::vector<int>& cell) {
                new_table[box_index(new_period, cell)] = table[box_index(period, cell)];
            });
            period = std::move(new_period);
            table = std::move(new_table);
            break;
        }
    }
}

std::vector<int> lcm_period(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::lcm(a[i], b[i]);
    return out;
}

// Additive period of t -> (t*v + w) mod p: the smallest l >= 1 with l*v = 0
// componentwise mod p.
long long line_class_period(const LatticeVector& v, const std::vector<int>& period) {
    long long l = 1;
    for (std::size_t i = 0; i < period.size(); ++i) {
        const Int p(period[i]);
        const Int g = gcd_int(v[static_cast<int>(i)], p);
        const long long li = static_cast<long long>(p / g);
        l = std::lcm(l, li);
    }
    return l;
}

Int checked_pow(const Int& base, int exp) {
    Int out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

}  // namespace

SymbolicConfig::SymbolicConfig(int alphabet, std::vector<int> period, std::vector<int> background,
                               std::map<LatticeVector, int> defects,
                               std::optional<BlockFamily> block)
    : alphabet_(alphabet),
      period_(std::move(period)),
      background_(std::move(background)),
      defects_(std::move(defects)),
      block_(std::move(block)) {
    if (alphabet_ < 2) throw std::invalid_argument("SymbolicConfig: alphabet must have size >= 2");
    if (period_.empty()) throw std::invalid_argument("SymbolicConfig: dimension must be positive");
    for (int p : period_) {
        if (p <= 0) throw std::invalid_argument("SymbolicConfig: period entries must be positive");
    }
    if (background_.size() != box_size(period_)) {
        throw std::invalid_argument("SymbolicConfig: background table size mismatch");
    }
    auto check_symbol = [&](int s) {
        if (s < 0 || s >= alphabet_) {
            throw std::invalid_argument("SymbolicConfig: symbol out of alphabet range");
        }
    };
    for (int s : background_) check_symbol(s);
    for (const auto& [pos, s] : defects_) {
        if (pos.dim() != dim()) {
            throw std::invalid_argument("SymbolicConfig: defect dimension mismatch");
        }
        check_symbol(s);
    }
    if (block_) {
        if (block_->direction.dim() != dim() || block_->offset.dim() != dim()) {
            throw std::invalid_argument("SymbolicConfig: block dimension mismatch");
        }
        if (block_->direction.is_zero()) {
            throw std::invalid_argument("SymbolicConfig: block direction must be nonzero");
        }
        if (block_->base < 2) throw std::invalid_argument("SymbolicConfig: block base must be >= 2");
        check_symbol(block_->symbol);
    }
    normalize();
}

SymbolicConfig SymbolicConfig::uniform(int dim, int alphabet, int symbol) {
    return SymbolicConfig(alphabet, std::vector<int>(static_cast<std::size_t>(dim), 1),
                          {symbol});
}

void SymbolicConfig::normalize() {
    minimize_period(period_, background_);

    // Defects that repeat the background are no-ops everywhere (under a block
    // the cell shows the block symbol regardless).
    for (auto it = defects_.begin(); it != defects_.end();) {
        if (it->second == background_at(it->first)) {
            it = defects_.erase(it);
        } else {
            ++it;
        }
    }

    if (block_) {
        // Drop the family if it repaints every cell with the value already
        // visible there: background on every line class, and any surviving
        // defect on a block cell already shows the block symbol.
        const long long l = line_class_period(block_->direction, period_);
        bool noop = true;
        for (long long t = 0; t < l && noop; ++t) {
            const LatticeVector cell = block_->direction * Int(t) + block_->offset;
            if (background_at(cell) != block_->symbol) noop = false;
        }
        if (noop) {
            for (const auto& [pos, s] : defects_) {
                if (s != block_->symbol && is_block_cell(pos)) {
                    noop = false;
                    break;
                }
            }
        }
        if (noop) block_.reset();
    }

    if (block_) {
        // Defects under block cells are invisible.
        for (auto it = defects_.begin(); it != defects_.end();) {
            if (is_block_cell(it->first)) {
                it = defects_.erase(it);
            } else {
                ++it;
            }
        }
    }
}

int SymbolicConfig::background_at(const LatticeVector& m) const {
    return background_[box_index(period_, m)];
}

bool SymbolicConfig::is_block_cell(const LatticeVector& m) const {
    if (!block_) return false;
    const LatticeVector rel = m - block_->offset;
    int pivot = -1;
    for (int i = 0; i < dim(); ++i) {
        if (block_->direction[i] != 0) {
            pivot = i;
            break;
        }
    }
    const Int& vp = block_->direction[pivot];
    if (rel[pivot] % vp != 0) return false;
    const Int t = rel[pivot] / vp;
    if (t < block_->base) return false;
    for (int i = 0; i < dim(); ++i) {
        if (rel[i] != t * block_->direction[i]) return false;
    }
    // t lies in some block [B^j, B^j + j]?
    Int power = block_->base;
    for (Int j = 1; power <= t; ++j, power *= block_->base) {
        if (t <= power + j) return t >= power;
    }
    return false;
}

int SymbolicConfig::at(const LatticeVector& m) const {
    if (m.dim() != dim()) throw std::invalid_argument("SymbolicConfig::at: dimension mismatch");
    if (block_ && is_block_cell(m)) return block_->symbol;
    const auto it = defects_.find(m);
    if (it != defects_.end()) return it->second;
    return background_at(m);
}

SymbolicConfig SymbolicConfig::translated(const LatticeVector& shift) const {
    if (shift.dim() != dim()) {
        throw std::invalid_argument("SymbolicConfig::translated: dimension mismatch");
    }
    std::vector<int> bg(background_.size());
    for_each_cell(period_, [&](const std::vector<int>& cell) {
        std::vector<Int> coords;
        coords.reserve(cell.size());
        for (std::size_t i = 0; i < cell.size(); ++i) coords.emplace_back(cell[i]);
        const LatticeVector pos = LatticeVector(std::move(coords)) + shift;
        bg[box_index(period_, cell)] = background_[box_index(period_, pos)];
    });
    std::map<LatticeVector, int> defects;
    for (const auto& [pos, s] : defects_) defects.emplace(pos - shift, s);
    std::optional<BlockFamily> block = block_;
    if (block) block->offset = block->offset - shift;
    return SymbolicConfig(alphabet_, period_, std::move(bg), std::move(defects), std::move(block));
}

SymbolicConfig SymbolicConfig::with_defect(const LatticeVector& at, int symbol) const {
    std::map<LatticeVector, int> defects = defects_;
    defects[at] = symbol;
    return SymbolicConfig(alphabet_, period_, background_, std::move(defects), block_);
}

SymbolicConfig SymbolicConfig::with_block(BlockFamily block) const {
    if (block_) throw std::invalid_argument("SymbolicConfig: at most one block family");
    return SymbolicConfig(alphabet_, period_, background_, defects_, std::move(block));
}

bool SymbolicConfig::operator==(const SymbolicConfig& o) const {
    if (alphabet_ != o.alphabet_ || dim() != o.dim()) return false;
    if (defects_ != o.defects_ || block_ != o.block_) return false;
    if (period_ != o.period_) return false;
    return background_ == o.background_;
}

std::string SymbolicConfig::to_string() const {
    std::ostringstream os;
    os << "config(q=" << alphabet_ << ", period=(";
    for (std::size_t i = 0; i < period_.size(); ++i) {
        if (i) os << ',';
        os << period_[i];
    }
    os << "), defects=" << defects_.size();
    if (block_) {
        os << ", block dir=" << block_->direction.to_string() << " base=" << block_->base;
    }
    os << ')';
    return os.str();
}

namespace {

// Radius beyond which two structurally distinct configurations must already
// have disagreed; a safety net for the shell scan.
long long difference_scan_bound(const SymbolicConfig& x, const SymbolicConfig& y) {
    long long bound = 1;
    const auto widen = [&](const Int& v) {
        const Int capped = v > 100000 ? Int(100000) : v;
        bound = std::max(bound, static_cast<long long>(capped));
    };
    for (const auto* c : {&x, &y}) {
        long long l = 1;
        for (int p : c->period()) l = std::lcm(l, static_cast<long long>(p));
        bound = std::max(bound, l);
        for (const auto& kv : c->defects()) widen(kv.first.max_norm());
        if (c->block()) {
            const auto& b = *c->block();
            long long classes = line_class_period(b.direction, x.period());
            classes = std::lcm(classes, line_class_period(b.direction, y.period()));
            Int t_reach = checked_pow(b.base, static_cast<int>(std::min(classes + 1, 24LL)));
            widen(b.direction.max_norm() * (t_reach + classes + 1) + b.offset.max_norm());
        }
    }
    return std::min(bound + 2, 200000LL);
}

}  // namespace

Dyadic symbolic_distance(const SymbolicConfig& x, const SymbolicConfig& y) {
    if (x.alphabet() != y.alphabet() || x.dim() != y.dim()) {
        throw std::invalid_argument("symbolic_distance: incompatible configurations");
    }
    if (x == y) return Dyadic::zero();
    const int d = x.dim();
    // 2^-dist_inf(0, D) for the structural difference set D is exactly the
    // distance; the shell scan below stays as the fallback for opaque sets.
    const DiffSet ds = difference_set(x, y);
    if (ds.kind != DiffSet::Kind::opaque) {
        return diffset_profile_value(ds, LatticeVector::zero(d));
    }
    const long long cap = difference_scan_bound(x, y);
    for (long long r = 0; r <= cap; ++r) {
        // cells with |m|_inf == r
        std::vector<Int> t(static_cast<std::size_t>(d), Int(-r));
        while (true) {
            bool on_shell = r == 0;
            for (const auto& c : t) {
                if (c == r || c == -r) {
                    on_shell = true;
                    break;
                }
            }
            if (on_shell) {
                const LatticeVector m{std::vector<Int>(t)};
                if (x.at(m) != y.at(m)) return Dyadic::pow2_neg(Int(r));
            }
            int i = d - 1;
            while (i >= 0) {
                auto& c = t[static_cast<std::size_t>(i)];
                if (c < r) {
                    ++c;
                    break;
                }
                c = -r;
                --i;
            }
            if (i < 0) break;
        }
    }
    throw std::logic_error("symbolic_distance: no difference within scan bound");
}

DiffSet DiffSet::make_empty(int dim) {
    DiffSet d;
    d.kind = Kind::empty;
    d.dim = dim;
    return d;
}

DiffSet DiffSet::make_finite(std::vector<LatticeVector> cells) {
    if (cells.empty()) throw std::invalid_argument("DiffSet: finite set must be nonempty");
    DiffSet d;
    d.kind = Kind::finite;
    d.dim = cells.front().dim();
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    d.cells = std::move(cells);
    return d;
}

DiffSet DiffSet::make_periodic(std::vector<int> period, std::vector<LatticeVector> residues) {
    if (residues.empty()) throw std::invalid_argument("DiffSet: residue set must be nonempty");
    DiffSet d;
    d.kind = Kind::periodic;
    d.dim = static_cast<int>(period.size());
    d.period = std::move(period);
    std::sort(residues.begin(), residues.end());
    d.residues = std::move(residues);
    return d;
}

DiffSet DiffSet::make_block_line(LatticeVector direction, Int base, LatticeVector offset) {
    DiffSet d;
    d.kind = Kind::block_line;
    d.dim = direction.dim();
    d.direction = std::move(direction);
    d.base = std::move(base);
    d.offset = std::move(offset);
    return d;
}

DiffSet DiffSet::make_opaque(int dim) {
    DiffSet d;
    d.kind = Kind::opaque;
    d.dim = dim;
    return d;
}

namespace {

// Reduces an L-periodic indicator set to its minimal period and residue list.
DiffSet reduce_periodic(const std::vector<int>& period_in,
                        const std::set<std::vector<Int>>& residues_in) {
    std::vector<int> period = period_in;
    std::vector<int> table(box_size(period), 0);
    for (const auto& r : residues_in) {
        table[box_index(period, LatticeVector(std::vector<Int>(r)))] = 1;
    }
    minimize_period(period, table);
    std::vector<LatticeVector> residues;
    for_each_cell(period, [&](const std::vector<int>& cell) {
        if (!table[box_index(period, cell)]) return;
        std::vector<Int> coords(cell.begin(), cell.end());
        residues.emplace_back(std::move(coords));
    });
    return DiffSet::make_periodic(std::move(period), std::move(residues));
}

}  // namespace

DiffSet difference_set(const SymbolicConfig& x, const SymbolicConfig& y) {
    if (x.alphabet() != y.alphabet() || x.dim() != y.dim()) {
        throw std::invalid_argument("difference_set: incompatible configurations");
    }
    const int d = x.dim();
    if (x == y) return DiffSet::make_empty(d);

    const auto L = lcm_period(x.period(), y.period());
    bool bg_equal = true;
    std::set<std::vector<Int>> bg_diff;
    for_each_cell(L, [&](const std::vector<int>& cell) {
        std::vector<Int> coords(cell.begin(), cell.end());
        const LatticeVector m{std::move(coords)};
        if (x.background_at(m) != y.background_at(m)) {
            bg_equal = false;
            bg_diff.insert(m.coords());
        }
    });

    const bool xb = x.block().has_value();
    const bool yb = y.block().has_value();

    if (xb && yb && !(*x.block() == *y.block())) return DiffSet::make_opaque(d);

    if (xb != yb) {
        // Exactly one block family; the difference is that family's cell set
        // precisely when everything else agrees and the family disagrees with
        // the other configuration at every cell.
        const SymbolicConfig& with = xb ? x : y;
        const SymbolicConfig& without = xb ? y : x;
        const BlockFamily& b = *with.block();
        if (!bg_equal) return DiffSet::make_opaque(d);
        for (const auto* cfg : {&x, &y}) {
            for (const auto& kv : cfg->defects()) {
                if (with.is_block_cell(kv.first)) continue;
                if (x.at(kv.first) != y.at(kv.first)) return DiffSet::make_opaque(d);
            }
        }
        const long long l = line_class_period(b.direction, L);
        for (long long t = 0; t < l; ++t) {
            const LatticeVector cell = b.direction * Int(t) + b.offset;
            if (without.background_at(cell) == b.symbol) return DiffSet::make_opaque(d);
        }
        for (const auto& [pos, s] : without.defects()) {
            if (with.is_block_cell(pos) && s == b.symbol) return DiffSet::make_opaque(d);
        }
        return DiffSet::make_block_line(b.direction, b.base, b.offset);
    }

    // No blocks, or identical blocks cancelling on the line.
    if (bg_equal) {
        std::vector<LatticeVector> cells;
        for (const auto* cfg : {&x, &y}) {
            for (const auto& kv : cfg->defects()) {
                if (x.at(kv.first) != y.at(kv.first)) cells.push_back(kv.first);
            }
        }
        if (cells.empty()) return DiffSet::make_opaque(d);  // unreachable for normalized inputs
        return DiffSet::make_finite(std::move(cells));
    }
    if (xb) return DiffSet::make_opaque(d);  // periodic difference with line cells removed

    // Purely periodic difference only when defects do not disturb it.
    for (const auto* cfg : {&x, &y}) {
        for (const auto& kv : cfg->defects()) {
            const bool predicted = x.background_at(kv.first) != y.background_at(kv.first);
            const bool actual = x.at(kv.first) != y.at(kv.first);
            if (predicted != actual) return DiffSet::make_opaque(d);
        }
    }
    return reduce_periodic(L, bg_diff);
}

namespace {

Int finite_cell_distance(const std::vector<LatticeVector>& cells, const LatticeVector& n) {
    Int best = (n - cells.front()).max_norm();
    for (std::size_t i = 1; i < cells.size(); ++i) {
        best = std::min(best, (n - cells[i]).max_norm());
    }
    return best;
}

Int periodic_distance(const DiffSet& d, const LatticeVector& n) {
    Int best = -1;
    for (const auto& r : d.residues) {
        Int dist = 0;
        for (int i = 0; i < d.dim; ++i) {
            const Int p(d.period[static_cast<std::size_t>(i)]);
            Int a = (n[i] - r[i]) % p;
            if (a < 0) a += p;
            dist = std::max(dist, std::min(a, Int(p - a)));
        }
        if (best < 0 || dist < best) best = dist;
    }
    return best;
}

// Largest block cell parameter <= t, if any.
std::optional<Int> block_pred(const Int& base, const Int& t) {
    if (t < base) return std::nullopt;
    Int power = base;
    Int j = 1;
    std::optional<Int> best;
    while (power <= t) {
        best = std::min(t, Int(power + j));
        power *= base;
        j += 1;
    }
    return best;
}

// Smallest block cell parameter >= t.
Int block_succ(const Int& base, const Int& t) {
    if (t <= base) return base;
    Int power = base;
    Int j = 1;
    while (power <= t) {
        if (t <= power + j) return t;
        power *= base;
        j += 1;
    }
    return power;
}

Int block_line_distance(const DiffSet& d, const LatticeVector& n) {
    const LatticeVector rel = n - d.offset;
    const auto f = [&](const Int& t) {
        Int val = 0;
        for (int i = 0; i < d.dim; ++i) {
            val = std::max(val, abs_int(rel[i] - t * d.direction[i]));
        }
        return val;
    };
    // Integer ternary search for the convex minimum over all t. Any t with
    // f(t) <= f(0) = |rel| satisfies |t| <= 2|rel| via the pivot coordinate.
    Int lo = -(rel.max_norm() * 2 + 2), hi = rel.max_norm() * 2 + 2;
    while (hi - lo > 2) {
        const Int m1 = lo + (hi - lo) / 3;
        const Int m2 = hi - (hi - lo) / 3;
        if (f(m1) <= f(m2)) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    Int t0 = lo;
    for (Int t = lo + 1; t <= hi; ++t) {
        if (f(t) < f(t0)) t0 = t;
    }
    Int best = f(block_succ(d.base, t0));
    if (const auto p = block_pred(d.base, t0)) best = std::min(best, f(*p));
    return best;
}

}  // namespace

Dyadic diffset_profile_value(const DiffSet& d, const LatticeVector& n) {
    if (d.kind != DiffSet::Kind::empty && n.dim() != d.dim) {
        throw std::invalid_argument("diffset_profile_value: dimension mismatch");
    }
    switch (d.kind) {
        case DiffSet::Kind::empty:
            return Dyadic::zero();
        case DiffSet::Kind::finite:
            return Dyadic::pow2_neg(finite_cell_distance(d.cells, n));
        case DiffSet::Kind::periodic:
            return Dyadic::pow2_neg(periodic_distance(d, n));
        case DiffSet::Kind::block_line:
            return Dyadic::pow2_neg(block_line_distance(d, n));
        case DiffSet::Kind::opaque:
            break;
    }
    throw std::domain_error("diffset_profile_value: opaque difference structure");
}

Int periodic_covering_radius(const DiffSet& d) {
    if (d.kind != DiffSet::Kind::periodic) {
        throw std::invalid_argument("periodic_covering_radius: periodic set required");
    }
    Int worst = 0;
    for_each_cell(d.period, [&](const std::vector<int>& cell) {
        std::vector<Int> coords(cell.begin(), cell.end());
        worst = std::max(worst, periodic_distance(d, LatticeVector(std::move(coords))));
    });
    return worst;
}

}  // namespace ktc
