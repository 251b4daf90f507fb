#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "abelcode/engine.hpp"

namespace abelcode {

/// Z/m_0 + Z/m_1 + ... given by an ordered list of cyclic moduli (m_j >= 1).
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;
    explicit FiniteAbelianGroup(Vector moduli);

    const Vector& moduli() const { return moduli_; }
    std::size_t rank() const { return moduli_.size(); }
    /// Throws std::overflow_error if the order does not fit in 64 bits.
    Int cardinality() const;
    Int exponent() const { return lcm_of(moduli_); }

    bool contains(std::span<const Int> g) const;
    /// Throws std::invalid_argument unless g is a valid element.
    void validate(std::span<const Int> g) const;
    Vector zero() const { return Vector(moduli_.size(), 0); }
    Vector add(std::span<const Int> a, std::span<const Int> b) const;
    Vector negate(std::span<const Int> a) const;
    Vector scale(Int k, std::span<const Int> a) const;
    Vector reduce(std::span<const Int> a) const;

    /// Direct sum with another group (coordinates concatenated).
    FiniteAbelianGroup operator+(const FiniteAbelianGroup& other) const;
    bool operator==(const FiniteAbelianGroup&) const = default;
    std::string to_string() const;

private:
    Vector moduli_;
};

/// Least n >= 1 with n*g = 0, i.e. lcm_j(m_j / gcd(m_j, g_j)).
Int element_order(const FiniteAbelianGroup& group, std::span<const Int> g);

/// A subgroup stored by its Howell basis over the ambient moduli.
class Subgroup {
public:
    Subgroup() = default;
    Subgroup(FiniteAbelianGroup ambient, std::vector<Vector> generators);
    static Subgroup zero(const FiniteAbelianGroup& ambient);
    static Subgroup whole(const FiniteAbelianGroup& ambient);

    const FiniteAbelianGroup& ambient() const { return ambient_; }
    const ResidueMatrix& basis() const { return basis_; }
    const std::vector<Vector>& generators() const { return basis_.rows(); }

    bool contains(std::span<const Int> g) const;
    bool is_zero() const { return basis_.empty(); }
    bool is_subgroup_of(const Subgroup& other) const;
    Int cardinality() const;
    Int exponent() const;
    Vector invariant_factors() const { return smith_invariants(basis_); }

    Subgroup join(const Subgroup& other) const;
    /// Elements of the subgroup whose listed coordinates are all zero.
    Subgroup vanishing_on(std::span<const std::size_t> coordinates) const;
    /// Image under deletion of all coordinates except the listed ones (in the given order).
    Subgroup project(std::span<const std::size_t> coordinates) const;
    /// Image under multiplication by k.
    Subgroup multiple(Int k) const;
    /// Elements x with k*x = 0.
    Subgroup torsion(Int k) const;

    /// Visits every element once, in Howell-coefficient order.
    void for_each_element(const std::function<void(const Vector&)>& visit) const;

    bool operator==(const Subgroup&) const = default;

private:
    FiniteAbelianGroup ambient_;
    ResidueMatrix basis_;
};

/// One p-primary component (G)_p with the coordinate maps G -> (G)_p -> G.
struct PrimaryComponent {
    Int prime = 0;
    FiniteAbelianGroup component;
    /// Coordinates of G with nontrivial p-part, in order.
    std::vector<std::size_t> coordinates;

    Vector project(const FiniteAbelianGroup& parent, std::span<const Int> g) const;
    Vector embed(const FiniteAbelianGroup& parent, std::span<const Int> x) const;
};

/// Components for every prime dividing some modulus, keyed by prime.
std::map<Int, PrimaryComponent> primary_decomposition(const FiniteAbelianGroup& group);

/// Height of g at p: either a finite value or infinite.
class Height {
public:
    static Height finite(Int h) { return Height(h); }
    static Height infinite() { return Height(std::nullopt); }
    bool is_infinite() const { return !value_; }
    Int value() const;
    bool operator==(const Height&) const = default;
    std::string to_string() const;

private:
    explicit Height(std::optional<Int> v) : value_(v) {}
    std::optional<Int> value_;
};

/// Largest h such that p^h x = g is solvable. Infinite exactly when g is divisible by every
/// power of p, i.e. when the p-primary part of g vanishes (g = 0 in a p-group).
/// Throws std::invalid_argument for non-prime p.
Height height(const FiniteAbelianGroup& group, std::span<const Int> g, Int p);

struct Socle {
    Subgroup subgroup;
    std::size_t dimension = 0;
};

/// G[p] = {g : p g = 0} and its dimension over Z/p.
Socle socle(const FiniteAbelianGroup& group, Int p);

}  // namespace abelcode
