#include "abelcode/groups.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace abelcode {

FiniteAbelianGroup::FiniteAbelianGroup(Vector moduli) : moduli_(std::move(moduli)) {
    for (Int m : moduli_)
        if (m < 1) throw std::invalid_argument("FiniteAbelianGroup: moduli must be >= 1");
}

Int FiniteAbelianGroup::cardinality() const {
    Int c = 1;
    for (Int m : moduli_) c = checked_mul(c, m);
    return c;
}

bool FiniteAbelianGroup::contains(std::span<const Int> g) const {
    if (g.size() != moduli_.size()) return false;
    for (std::size_t j = 0; j < g.size(); ++j)
        if (g[j] < 0 || g[j] >= moduli_[j]) return false;
    return true;
}

void FiniteAbelianGroup::validate(std::span<const Int> g) const {
    if (g.size() != moduli_.size())
        throw std::invalid_argument("element " + format_vector(g) + " does not conform to " + to_string());
    for (std::size_t j = 0; j < g.size(); ++j)
        if (g[j] < 0 || g[j] >= moduli_[j])
            throw std::invalid_argument("residue " + std::to_string(g[j]) + " outside Z/" + std::to_string(moduli_[j]));
}

Vector FiniteAbelianGroup::add(std::span<const Int> a, std::span<const Int> b) const {
    Vector out(moduli_.size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = mod(a[j] + b[j], moduli_[j]);
    return out;
}

Vector FiniteAbelianGroup::negate(std::span<const Int> a) const {
    Vector out(moduli_.size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = mod(-a[j], moduli_[j]);
    return out;
}

Vector FiniteAbelianGroup::scale(Int k, std::span<const Int> a) const {
    Vector out(moduli_.size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = mul_mod(mod(k, moduli_[j]), mod(a[j], moduli_[j]), moduli_[j]);
    return out;
}

Vector FiniteAbelianGroup::reduce(std::span<const Int> a) const {
    Vector out(moduli_.size());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = mod(a[j], moduli_[j]);
    return out;
}

FiniteAbelianGroup FiniteAbelianGroup::operator+(const FiniteAbelianGroup& other) const {
    Vector m = moduli_;
    m.insert(m.end(), other.moduli_.begin(), other.moduli_.end());
    return FiniteAbelianGroup(std::move(m));
}

std::string FiniteAbelianGroup::to_string() const {
    if (moduli_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t j = 0; j < moduli_.size(); ++j) os << (j ? "+" : "") << "Z/" << moduli_[j];
    return os.str();
}

Int element_order(const FiniteAbelianGroup& group, std::span<const Int> g) {
    group.validate(g);
    Int order = 1;
    for (std::size_t j = 0; j < g.size(); ++j) {
        Int m = group.moduli()[j];
        order = lcm(order, m / gcd(m, g[j]));
    }
    return order;
}

// ---------------------------------------------------------------------------------------------

Subgroup::Subgroup(FiniteAbelianGroup ambient, std::vector<Vector> generators) : ambient_(std::move(ambient)) {
    for (const auto& g : generators) ambient_.validate(g);
    basis_ = howell_form(ResidueMatrix(ambient_.moduli(), std::move(generators)));
}

Subgroup Subgroup::zero(const FiniteAbelianGroup& ambient) { return Subgroup(ambient, {}); }

Subgroup Subgroup::whole(const FiniteAbelianGroup& ambient) {
    std::vector<Vector> gens;
    for (std::size_t j = 0; j < ambient.rank(); ++j) {
        Vector e = ambient.zero();
        e[j] = ambient.moduli()[j] > 1 ? 1 : 0;
        gens.push_back(std::move(e));
    }
    return Subgroup(ambient, std::move(gens));
}

bool Subgroup::contains(std::span<const Int> g) const {
    if (!ambient_.contains(g)) return false;
    return howell_contains(basis_, g);
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
    if (ambient_ != other.ambient_) return false;
    return std::all_of(generators().begin(), generators().end(), [&](const Vector& g) { return other.contains(g); });
}

Int Subgroup::cardinality() const {
    Int c = 1;
    for (Int o : pivot_orders(basis_)) c = checked_mul(c, o);
    return c;
}

Int Subgroup::exponent() const {
    Int e = 1;
    for (const auto& g : generators()) e = lcm(e, element_order(ambient_, g));
    return e;
}

Subgroup Subgroup::join(const Subgroup& other) const {
    if (ambient_ != other.ambient_) throw std::invalid_argument("Subgroup::join: ambient mismatch");
    std::vector<Vector> gens = generators();
    gens.insert(gens.end(), other.generators().begin(), other.generators().end());
    return Subgroup(ambient_, std::move(gens));
}

Subgroup Subgroup::vanishing_on(std::span<const std::size_t> coordinates) const {
    const std::size_t n = ambient_.rank();
    std::vector<bool> selected(n, false);
    for (std::size_t c : coordinates) {
        if (c >= n) throw std::out_of_range("Subgroup::vanishing_on: coordinate out of range");
        selected[c] = true;
    }
    std::vector<std::size_t> order;
    for (std::size_t j = 0; j < n; ++j)
        if (selected[j]) order.push_back(j);
    const std::size_t leading = order.size();
    for (std::size_t j = 0; j < n; ++j)
        if (!selected[j]) order.push_back(j);

    Vector moduli(n);
    for (std::size_t k = 0; k < n; ++k) moduli[k] = ambient_.moduli()[order[k]];
    std::vector<Vector> rows;
    for (const auto& g : generators()) {
        Vector r(n);
        for (std::size_t k = 0; k < n; ++k) r[k] = g[order[k]];
        rows.push_back(std::move(r));
    }
    ResidueMatrix h = howell_form(ResidueMatrix(std::move(moduli), std::move(rows)));
    auto piv = pivot_columns(h);
    std::vector<Vector> kept;
    for (std::size_t i = 0; i < h.row_count(); ++i) {
        if (piv[i] < leading) continue;
        Vector g(n);
        for (std::size_t k = 0; k < n; ++k) g[order[k]] = h.rows()[i][k];
        kept.push_back(std::move(g));
    }
    return Subgroup(ambient_, std::move(kept));
}

Subgroup Subgroup::project(std::span<const std::size_t> coordinates) const {
    Vector moduli;
    for (std::size_t c : coordinates) {
        if (c >= ambient_.rank()) throw std::out_of_range("Subgroup::project: coordinate out of range");
        moduli.push_back(ambient_.moduli()[c]);
    }
    std::vector<Vector> gens;
    for (const auto& g : generators()) {
        Vector r;
        r.reserve(coordinates.size());
        for (std::size_t c : coordinates) r.push_back(g[c]);
        gens.push_back(std::move(r));
    }
    return Subgroup(FiniteAbelianGroup(std::move(moduli)), std::move(gens));
}

Subgroup Subgroup::multiple(Int k) const {
    std::vector<Vector> gens;
    for (const auto& g : generators()) gens.push_back(ambient_.scale(k, g));
    return Subgroup(ambient_, std::move(gens));
}

Subgroup Subgroup::torsion(Int k) const {
    if (is_zero()) return *this;
    std::vector<Vector> scaled;
    for (const auto& g : generators()) scaled.push_back(ambient_.scale(k, g));
    auto sol = solve_congruence_system(ResidueMatrix(ambient_.moduli(), std::move(scaled)), ambient_.zero());
    std::vector<Vector> gens;
    for (const auto& coeffs : sol->kernel.rows()) {
        Vector x = ambient_.zero();
        for (std::size_t i = 0; i < coeffs.size(); ++i) x = ambient_.add(x, ambient_.scale(coeffs[i], generators()[i]));
        gens.push_back(std::move(x));
    }
    return Subgroup(ambient_, std::move(gens));
}

void Subgroup::for_each_element(const std::function<void(const Vector&)>& visit) const {
    const Vector orders = pivot_orders(basis_);
    const auto& gens = generators();
    std::vector<Vector> wrap;  // -(order_i - 1) * g_i
    for (std::size_t i = 0; i < gens.size(); ++i) wrap.push_back(ambient_.scale(-(orders[i] - 1), gens[i]));
    Vector digits(gens.size(), 0);
    Vector current = ambient_.zero();
    while (true) {
        visit(current);
        std::size_t i = 0;
        for (; i < gens.size(); ++i) {
            if (digits[i] + 1 < orders[i]) {
                ++digits[i];
                current = ambient_.add(current, gens[i]);
                break;
            }
            digits[i] = 0;
            current = ambient_.add(current, wrap[i]);
        }
        if (i == gens.size()) return;
    }
}

// ---------------------------------------------------------------------------------------------

Vector PrimaryComponent::project(const FiniteAbelianGroup& parent, std::span<const Int> g) const {
    parent.validate(g);
    Vector x(coordinates.size());
    for (std::size_t k = 0; k < coordinates.size(); ++k) x[k] = mod(g[coordinates[k]], component.moduli()[k]);
    return x;
}

Vector PrimaryComponent::embed(const FiniteAbelianGroup& parent, std::span<const Int> x) const {
    component.validate(x);
    Vector g = parent.zero();
    for (std::size_t k = 0; k < coordinates.size(); ++k) {
        const Int m = parent.moduli()[coordinates[k]];
        const Int q = component.moduli()[k];
        const Int cofactor = m / q;
        // CRT idempotent: == 1 mod q, == 0 mod cofactor
        Int inv = 1;
        if (q > 1) {
            Int a = mod(cofactor, q);
            for (Int c = 1; c < q; ++c)
                if (mul_mod(a, c, q) == 1) {
                    inv = c;
                    break;
                }
        }
        const Int idempotent = mul_mod(cofactor, inv, m);
        g[coordinates[k]] = mul_mod(x[k], idempotent, m);
    }
    return g;
}

std::map<Int, PrimaryComponent> primary_decomposition(const FiniteAbelianGroup& group) {
    std::map<Int, PrimaryComponent> out;
    for (Int m : group.moduli())
        for (auto [p, e] : factorize(m)) out[p].prime = p;
    for (auto& [p, comp] : out) {
        Vector moduli;
        for (std::size_t j = 0; j < group.rank(); ++j) {
            const int e = valuation(group.moduli()[j], p);
            if (e == 0) continue;
            Int q = 1;
            for (int k = 0; k < e; ++k) q *= p;
            moduli.push_back(q);
            comp.coordinates.push_back(j);
        }
        comp.component = FiniteAbelianGroup(std::move(moduli));
    }
    return out;
}

// ---------------------------------------------------------------------------------------------

Int Height::value() const {
    if (!value_) throw std::logic_error("Height::value on infinite height");
    return *value_;
}

std::string Height::to_string() const { return value_ ? std::to_string(*value_) : "infinite"; }

Height height(const FiniteAbelianGroup& group, std::span<const Int> g, Int p) {
    if (!is_prime(p)) throw std::invalid_argument("height: " + std::to_string(p) + " is not prime");
    group.validate(g);
    const int top = valuation(group.exponent(), p);
    Int power = 1;
    for (int h = 1; h <= top; ++h) {
        power = checked_mul(power, p);
        std::vector<Vector> rows;
        for (std::size_t j = 0; j < group.rank(); ++j) {
            Vector r = group.zero();
            r[j] = mod(power, group.moduli()[j]);
            rows.push_back(std::move(r));
        }
        if (!solve_congruence_system(ResidueMatrix(group.moduli(), std::move(rows)), g)) return Height::finite(h - 1);
    }
    // p^top G = p^h G for every h >= top
    return Height::infinite();
}

Socle socle(const FiniteAbelianGroup& group, Int p) {
    if (!is_prime(p)) throw std::invalid_argument("socle: " + std::to_string(p) + " is not prime");
    std::vector<Vector> gens;
    for (std::size_t j = 0; j < group.rank(); ++j) {
        const Int m = group.moduli()[j];
        if (m % p != 0) continue;
        Vector e = group.zero();
        e[j] = m / p;
        gens.push_back(std::move(e));
    }
    const std::size_t dim = gens.size();
    return Socle{Subgroup(group, std::move(gens)), dim};
}

}  // namespace abelcode
