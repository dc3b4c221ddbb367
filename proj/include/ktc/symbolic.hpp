#pragma once

#include "ktc/dyadic.hpp"
#include "ktc/lattice.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ktc {

/// Sparse family of marked cells {t*v + offset : B^j <= t <= B^j + j, j >= 1}
/// along the line through `offset` with direction `direction`, all carrying
/// `symbol`. Gaps between consecutive blocks grow without bound.
struct BlockFamily {
    LatticeVector direction;  // nonzero
    Int base = 2;             // >= 2
    int symbol = 0;
    LatticeVector offset;     // accumulated translation; zero at construction

    bool operator==(const BlockFamily& o) const {
        return direction == o.direction && base == o.base && symbol == o.symbol &&
               offset == o.offset;
    }
};

/// Point of the full shift: a periodic background overlaid with finitely many
/// defects and at most one block family (blocks override defects override
/// background). Normalized on construction so that structural equality decides
/// pointwise equality.
class SymbolicConfig {
public:
    SymbolicConfig(int alphabet, std::vector<int> period, std::vector<int> background,
                   std::map<LatticeVector, int> defects = {},
                   std::optional<BlockFamily> block = {});

    static SymbolicConfig uniform(int dim, int alphabet, int symbol);

    int dim() const { return static_cast<int>(period_.size()); }
    int alphabet() const { return alphabet_; }
    const std::vector<int>& period() const { return period_; }
    const std::vector<int>& background() const { return background_; }
    const std::map<LatticeVector, int>& defects() const { return defects_; }
    const std::optional<BlockFamily>& block() const { return block_; }

    /// Symbol at cell m; logarithmic in |m| when a block family is present.
    int at(const LatticeVector& m) const;

    /// Background symbol at cell m, ignoring defects and blocks.
    int background_at(const LatticeVector& m) const;

    bool is_block_cell(const LatticeVector& m) const;

    /// The configuration n -> value at (n + shift); the image of this point
    /// under the shift by `shift`.
    SymbolicConfig translated(const LatticeVector& shift) const;

    SymbolicConfig with_defect(const LatticeVector& at, int symbol) const;
    SymbolicConfig with_block(BlockFamily block) const;

    bool operator==(const SymbolicConfig& o) const;
    bool operator!=(const SymbolicConfig& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    int alphabet_;
    std::vector<int> period_;
    std::vector<int> background_;  // row-major over the period box
    std::map<LatticeVector, int> defects_;
    std::optional<BlockFamily> block_;

    void normalize();
};

/// 2^-min{|m|_inf : x_m != y_m}, and 0 for equal configurations. Equality is
/// decided structurally before any radius search, so this always terminates.
Dyadic symbolic_distance(const SymbolicConfig& x, const SymbolicConfig& y);

/// Where two configurations differ, described structurally. `opaque` means the
/// set is nonempty but matches no closed form here; nothing else is claimed.
struct DiffSet {
    enum class Kind { empty, finite, periodic, block_line, opaque };

    Kind kind = Kind::opaque;
    int dim = 0;

    std::vector<LatticeVector> cells;  // finite: sorted, nonempty

    std::vector<int> period;           // periodic: componentwise, minimal
    std::vector<LatticeVector> residues;  // periodic: sorted, reduced mod period

    LatticeVector direction;  // block_line
    Int base = 0;             // block_line
    LatticeVector offset;     // block_line

    static DiffSet make_empty(int dim);
    static DiffSet make_finite(std::vector<LatticeVector> cells);
    static DiffSet make_periodic(std::vector<int> period, std::vector<LatticeVector> residues);
    static DiffSet make_block_line(LatticeVector direction, Int base, LatticeVector offset);
    static DiffSet make_opaque(int dim);
};

DiffSet difference_set(const SymbolicConfig& x, const SymbolicConfig& y);

/// 2^-dist_inf(n, D) in closed form; throws std::domain_error for opaque sets.
Dyadic diffset_profile_value(const DiffSet& d, const LatticeVector& n);

/// max over Z^d of dist_inf(., D) for a periodic difference set.
Int periodic_covering_radius(const DiffSet& d);

}  // namespace ktc
