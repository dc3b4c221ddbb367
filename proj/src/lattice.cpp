#include "ktc/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ktc {

namespace {

void check_same_dim(const LatticeVector& a, const LatticeVector& b, const char* where) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument(std::string(where) + ": dimension mismatch");
    }
}

}  // namespace

LatticeVector::LatticeVector(std::vector<Int> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw std::invalid_argument("LatticeVector: dimension must be positive");
}

LatticeVector LatticeVector::zero(int dim) {
    if (dim <= 0) throw std::invalid_argument("LatticeVector: dimension must be positive");
    return LatticeVector(std::vector<Int>(static_cast<std::size_t>(dim), Int(0)));
}

LatticeVector LatticeVector::operator+(const LatticeVector& o) const {
    check_same_dim(*this, o, "LatticeVector::operator+");
    std::vector<Int> out(coords_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += o.coords_[i];
    return LatticeVector(std::move(out));
}

LatticeVector LatticeVector::operator-(const LatticeVector& o) const {
    check_same_dim(*this, o, "LatticeVector::operator-");
    std::vector<Int> out(coords_);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= o.coords_[i];
    return LatticeVector(std::move(out));
}

LatticeVector LatticeVector::operator-() const {
    std::vector<Int> out(coords_);
    for (auto& c : out) c = -c;
    return LatticeVector(std::move(out));
}

LatticeVector LatticeVector::operator*(const Int& s) const {
    std::vector<Int> out(coords_);
    for (auto& c : out) c *= s;
    return LatticeVector(std::move(out));
}

bool LatticeVector::operator<(const LatticeVector& o) const {
    check_same_dim(*this, o, "LatticeVector::operator<");
    return std::lexicographical_compare(coords_.begin(), coords_.end(), o.coords_.begin(),
                                        o.coords_.end());
}

bool LatticeVector::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Int& c) { return c == 0; });
}

Int LatticeVector::max_norm() const {
    Int best = 0;
    for (const auto& c : coords_) best = std::max(best, abs_int(c));
    return best;
}

std::string LatticeVector::to_string() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < dim(); ++i) {
        if (i) os << ',';
        os << coords_[static_cast<std::size_t>(i)];
    }
    os << ')';
    return os.str();
}

ConeIndex::ConeIndex(int k_, int dim_) : k(k_), dim(dim_) {
    if (dim < 1 || dim > 30) throw std::invalid_argument("ConeIndex: dimension must be in 1..30");
    const long long count = 1LL << dim;
    if (k < 1 || k > count) {
        throw std::invalid_argument("ConeIndex: k out of range 1.." + std::to_string(count));
    }
    mask.resize(static_cast<std::size_t>(dim));
    int bits = k - 1;
    for (int i = 0; i < dim; ++i) {
        mask[static_cast<std::size_t>(i)] = bits & 1;
        bits >>= 1;
    }
}

LinearForm::LinearForm(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("LinearForm: dimension must be positive");
}

std::string LinearForm::to_string() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < dim(); ++i) {
        if (i) os << ',';
        os << coeffs_[static_cast<std::size_t>(i)];
    }
    os << ')';
    return os.str();
}

bool cone_greater(const ConeIndex& k, const LatticeVector& a, const LatticeVector& b) {
    check_same_dim(a, b, "cone_greater");
    if (a.dim() != k.dim) throw std::invalid_argument("cone_greater: cone dimension mismatch");
    for (int i = 0; i < k.dim; ++i) {
        Int diff = a[i] - b[i];
        if (k.sign(i) < 0) diff = -diff;
        if (diff <= 0) return false;
    }
    return true;
}

namespace {

// Appends, in lex order of the signed vectors, the cone points whose unsigned
// coordinates lie in [1, s]^d with max exactly s.
void append_shell(const ConeIndex& k, int s, std::vector<LatticeVector>& out) {
    std::vector<LatticeVector> shell;
    std::vector<Int> t(static_cast<std::size_t>(k.dim), Int(1));
    while (true) {
        bool on_shell = false;
        for (const auto& c : t) {
            if (c == s) {
                on_shell = true;
                break;
            }
        }
        if (on_shell) {
            std::vector<Int> coords(t);
            for (int i = 0; i < k.dim; ++i) {
                auto& c = coords[static_cast<std::size_t>(i)];
                if (k.sign(i) < 0) c = -c;
            }
            shell.emplace_back(std::move(coords));
        }
        int i = k.dim - 1;
        while (i >= 0) {
            auto& c = t[static_cast<std::size_t>(i)];
            if (c < s) {
                ++c;
                break;
            }
            c = 1;
            --i;
        }
        if (i < 0) break;
    }
    std::sort(shell.begin(), shell.end());
    for (auto& v : shell) out.push_back(std::move(v));
}

}  // namespace

std::vector<LatticeVector> cone_shell(const ConeIndex& k, int radius) {
    if (radius < 0) throw std::invalid_argument("cone_shell: radius must be nonnegative");
    std::vector<LatticeVector> out;
    for (int s = 1; s <= radius; ++s) append_shell(k, s, out);
    return out;
}

std::vector<LatticeVector> full_box(int dim, int radius) {
    if (dim <= 0) throw std::invalid_argument("full_box: dimension must be positive");
    if (radius < 0) throw std::invalid_argument("full_box: radius must be nonnegative");
    std::vector<LatticeVector> out;
    out.push_back(LatticeVector::zero(dim));
    for (int s = 1; s <= radius; ++s) {
        std::vector<LatticeVector> shell;
        std::vector<Int> t(static_cast<std::size_t>(dim), Int(-s));
        while (true) {
            bool on_shell = false;
            for (const auto& c : t) {
                if (c == s || c == -s) {
                    on_shell = true;
                    break;
                }
            }
            if (on_shell) shell.emplace_back(std::vector<Int>(t));
            int i = dim - 1;
            while (i >= 0) {
                auto& c = t[static_cast<std::size_t>(i)];
                if (c < s) {
                    ++c;
                    break;
                }
                c = -s;
                --i;
            }
            if (i < 0) break;
        }
        std::sort(shell.begin(), shell.end());
        for (auto& v : shell) out.push_back(std::move(v));
    }
    return out;
}

Int r_eval(const LinearForm& h, const LatticeVector& n) {
    if (h.dim() != n.dim()) throw std::invalid_argument("r_eval: dimension mismatch");
    Int acc = 0;
    for (int i = 0; i < h.dim(); ++i) acc += h[i] * n[i];
    return acc;
}

ConeUnitSearch solve_cone_unit(const LinearForm& h, const ConeIndex& k, int bound) {
    if (h.dim() != k.dim) throw std::invalid_argument("solve_cone_unit: dimension mismatch");
    if (bound < 1) throw std::invalid_argument("solve_cone_unit: bound must be positive");
    ConeUnitSearch result;
    result.searched_bound = bound;
    for (const auto& m : cone_shell(k, bound)) {
        if (r_eval(h, m) == 1) {
            result.solution = m;
            break;
        }
    }
    return result;
}

LatticeVector scale_cone_unit(const LatticeVector& m, const Int& n, const LinearForm& h) {
    if (r_eval(h, m) != 1) {
        throw std::invalid_argument("scale_cone_unit: r(m) must equal 1");
    }
    if (n < 1) throw std::invalid_argument("scale_cone_unit: scale must be positive");
    return m * n;
}

}  // namespace ktc
