#include "abelcode/duality.hpp"

#include <stdexcept>

namespace abelcode {

QmodZ::QmodZ(Int numerator, Int denominator) {
    if (denominator < 1) throw std::invalid_argument("QmodZ: denominator must be positive");
    Int n = mod(numerator, denominator);
    Int g = gcd(n, denominator);
    if (n == 0) g = denominator;
    num_ = n / g;
    den_ = denominator / g;
}

QmodZ QmodZ::operator+(const QmodZ& o) const {
    Int d = lcm(den_, o.den_);
    return QmodZ(mod(mul_mod(num_, d / den_, d) + mul_mod(o.num_, d / o.den_, d), d), d);
}

QmodZ QmodZ::operator-() const { return QmodZ(-num_, den_); }

std::string QmodZ::to_string() const { return num_ == 0 ? "0" : std::to_string(num_) + "/" + std::to_string(den_); }

QmodZ pairing(const FiniteAbelianGroup& group, std::span<const Int> x, std::span<const Int> chi) {
    group.validate(x);
    group.validate(chi);
    const Int l = group.exponent();
    Int acc = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        const Int m = group.moduli()[j];
        acc = mod(acc + mul_mod(mul_mod(x[j], chi[j], l), l / m, l), l);
    }
    return QmodZ(acc, l);
}

Subgroup annihilator(const Subgroup& h) {
    const FiniteAbelianGroup& g = h.ambient();
    if (h.is_zero()) return Subgroup::whole(g);
    const Int l = g.exponent();
    const auto& gens = h.generators();
    // One unknown per coordinate; one congruence mod l per generator.
    std::vector<Vector> rows;
    for (std::size_t j = 0; j < g.rank(); ++j) {
        Vector row(gens.size());
        const Int scale = l / g.moduli()[j];
        for (std::size_t k = 0; k < gens.size(); ++k) row[k] = mul_mod(gens[k][j], scale, l);
        rows.push_back(std::move(row));
    }
    auto sol = solve_congruence_system(ResidueMatrix(Vector(gens.size(), l), std::move(rows)), Vector(gens.size(), 0));
    std::vector<Vector> chars;
    for (const auto& y : sol->kernel.rows()) chars.push_back(g.reduce(y));
    return Subgroup(g, std::move(chars));
}

QuotientDualityReport quotient_duality_check(const Subgroup& s, const Subgroup& r) {
    if (s.ambient() != r.ambient()) throw std::invalid_argument("quotient_duality_check: ambient mismatch");
    if (!s.is_subgroup_of(r)) throw std::invalid_argument("quotient_duality_check: S is not contained in R");
    QuotientDualityReport out;
    out.quotient_invariants = quotient_invariants(r.basis(), s.basis());
    const Subgroup s_perp = annihilator(s);
    const Subgroup r_perp = annihilator(r);
    out.annihilator_quotient_invariants = quotient_invariants(s_perp.basis(), r_perp.basis());
    out.consistent = out.quotient_invariants == out.annihilator_quotient_invariants;
    return out;
}

BlockCode dual_block_code(const BlockCode& code) { return BlockCode(code.space(), annihilator(code.subgroup())); }

}  // namespace abelcode
