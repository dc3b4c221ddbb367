#pragma once

#include "ktc/integers.hpp"

#include <optional>
#include <vector>

namespace ktc {

/// A point of Z^d with exact integer coordinates.
class LatticeVector {
public:
    LatticeVector() = default;
    explicit LatticeVector(std::vector<Int> coords);
    static LatticeVector zero(int dim);

    int dim() const { return static_cast<int>(coords_.size()); }
    const Int& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
    const std::vector<Int>& coords() const { return coords_; }

    LatticeVector operator+(const LatticeVector& o) const;
    LatticeVector operator-(const LatticeVector& o) const;
    LatticeVector operator-() const;
    LatticeVector operator*(const Int& s) const;

    bool operator==(const LatticeVector& o) const { return coords_ == o.coords_; }
    bool operator!=(const LatticeVector& o) const { return coords_ != o.coords_; }
    /// Lexicographic order; used wherever a canonical order over Z^d is needed.
    bool operator<(const LatticeVector& o) const;

    bool is_zero() const;
    Int max_norm() const;

    std::string to_string() const;

private:
    std::vector<Int> coords_;
};

/// Cone index k in {1, ..., 2^d}. Bit i-1 of k-1 flips the sign convention of
/// coordinate i, so k = 1 is the positive orthant and k = 2^d the negative one.
struct ConeIndex {
    ConeIndex(int k, int dim);

    int k;
    int dim;
    std::vector<int> mask;  // mask[i] = bit i of k-1, one entry per coordinate

    /// Coordinate sign: +1 where mask bit 0, -1 where mask bit 1.
    int sign(int i) const { return mask[static_cast<std::size_t>(i)] == 0 ? 1 : -1; }
};

/// Integer linear form n -> h_1 n_1 + ... + h_d n_d.
class LinearForm {
public:
    explicit LinearForm(std::vector<Int> coeffs);

    int dim() const { return static_cast<int>(coeffs_.size()); }
    const Int& operator[](int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    std::string to_string() const;

private:
    std::vector<Int> coeffs_;
};

/// Strict cone order: a >_k b iff every coordinate of a-b is strictly on the
/// k-side, i.e. sign_i(k) * (a_i - b_i) > 0 for all i.
bool cone_greater(const ConeIndex& k, const LatticeVector& a, const LatticeVector& b);

/// All n with n >_k 0 and |n|_inf <= radius, ordered by max-norm shell and
/// lexicographically inside each shell. cone_shell(k, N) is a prefix of
/// cone_shell(k, N+1).
std::vector<LatticeVector> cone_shell(const ConeIndex& k, int radius);

/// All n with |n|_inf <= radius (the full box, zero included), in the same
/// canonical shell-then-lex order.
std::vector<LatticeVector> full_box(int dim, int radius);

Int r_eval(const LinearForm& h, const LatticeVector& n);

struct ConeUnitSearch {
    std::optional<LatticeVector> solution;  // first m >_k 0 with r(m) = 1, in shell order
    int searched_bound = 0;
};

/// Searches the signed box of the given max-norm bound, in canonical shell
/// order, for m >_k 0 with r_eval(h, m) = 1.
ConeUnitSearch solve_cone_unit(const LinearForm& h, const ConeIndex& k, int bound);

/// Given m with r(m) = 1, returns n*m, which satisfies r(n*m) = n and stays in
/// every cone containing m.
LatticeVector scale_cone_unit(const LatticeVector& m, const Int& n, const LinearForm& h);

}  // namespace ktc
