#pragma once

#include "ktc/point.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace ktc {

enum class SystemKind { finite, shift, rotation_induced, product, conjugate, induced };

const char* system_kind_name(SystemKind kind);

struct SystemFlags {
    bool is_finite = false;
    bool is_isometric = false;
    bool is_shift_structured = false;
};

class System;
using SystemHandle = std::shared_ptr<const System>;

/// An invertible Z^d action on a metric space: act(n, .) for every n in Z^d,
/// with act(0) = id and act(m+n) = act(m) act(n).
class System {
public:
    System(SystemKind kind, int dim, SystemFlags flags, std::string name);
    virtual ~System() = default;

    SystemKind kind() const { return kind_; }
    int dimension() const { return dim_; }
    const SystemFlags& flags() const { return flags_; }
    const std::string& name() const { return name_; }

    virtual Point act(const LatticeVector& n, const Point& x) const = 0;
    virtual Dist dist(const Point& a, const Point& b) const = 0;
    /// Deterministic seeded sample of phase-space points.
    virtual std::vector<Point> sample_points(int count, std::uint64_t seed) const = 0;
    /// A point y != x with dist(x, y) <= radius, when the space structure
    /// supports constructing one.
    virtual std::optional<Point> perturb(const Point& x, const Rational& radius,
                                         std::uint64_t seed) const;

    // Capability views; null/empty when not applicable.
    virtual const FiniteSpace* finite_space() const { return nullptr; }
    virtual const std::vector<Permutation>* generators() const { return nullptr; }
    virtual int alphabet() const { return 0; }
    virtual SystemHandle base_system() const { return nullptr; }
    virtual const LinearForm* induced_form() const { return nullptr; }
    virtual std::pair<SystemHandle, SystemHandle> factor_systems() const {
        return {nullptr, nullptr};
    }

protected:
    void check_dim(const LatticeVector& n) const;

private:
    SystemKind kind_;
    int dim_;
    SystemFlags flags_;
    std::string name_;
};

/// Commuting permutations acting on a finite rational metric space.
SystemHandle make_finite(FiniteSpace space, std::vector<Permutation> generators);

/// Full shift on configurations over {0..alphabet-1}^(Z^dim).
SystemHandle make_shift(int dim, int alphabet);

/// n -> rotation by r(n) * alpha on the circle; the action induced from an
/// irrational rotation by the integer form h.
SystemHandle make_rotation_induced(double alpha, LinearForm h);

/// Coordinatewise action on the product space with the sup metric.
SystemHandle make_product(SystemHandle first, SystemHandle second);

using PointMap = std::function<Point(const Point&)>;

/// Action transported along a bijection h: act_B(n) = h o act_A(n) o h^-1.
/// The mutual-inverse identity is checked on seeded samples at construction.
SystemHandle make_conjugate(SystemHandle base, PointMap forward, PointMap backward,
                            int check_samples = 50, std::uint64_t seed = 1);

/// Z^d action n -> f^{r(n)} induced from an invertible Z action (dimension-1
/// system) by the integer form h of dimension dim.
SystemHandle make_induced(SystemHandle base, LinearForm h, int dim);

/// Seeded block-free configuration sampler for shift-type spaces.
SymbolicConfig sample_config(int dim, int alphabet, std::uint64_t seed);

/// Cellwise alphabet reversal s -> q-1-s of a configuration point; an
/// involution that commutes with every translation.
Point symbol_swap(const Point& p);

}  // namespace ktc
