#include "abelcode/structure.hpp"

#include <algorithm>

namespace abelcode {

namespace {

BlockCode span_of(const SequenceSpace& space, const std::vector<DecompositionGenerator>& gens, std::size_t count) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < count; ++i) rows.push_back(gens[i].element);
    return code_from_generators(space, rows);
}

bool directness_holds(const BlockCode& code, const Decomposition& d, std::string& detail) {
    const auto& gens = d.generators;
    for (std::size_t j = 0; j + 1 < gens.size(); ++j) {
        const BlockCode before = span_of(code.space(), gens, j + 1);
        const BlockCode next = code_from_generators(code.space(), {gens[j + 1].element});
        if (!intersect(before, next).is_zero()) {
            detail = "<y_1..y_" + std::to_string(j + 1) + "> meets <y_" + std::to_string(j + 2) + ">";
            return false;
        }
    }
    return true;
}

}  // namespace

Certificate verify_decomposition(const BlockCode& code, const Decomposition& d) {
    Certificate cert;
    const SequenceSpace& space = code.space();
    const FiniteAbelianGroup& flat = space.flat();
    auto record = [&](std::string condition, bool holds, std::string detail) {
        cert.entries.push_back({std::move(condition), holds, std::move(detail)});
        if (!holds && cert.first_failure.empty()) cert.first_failure = cert.entries.back().condition + ": " + cert.entries.back().detail;
    };

    bool shapes = true;
    for (const auto& g : d.generators) shapes &= flat.contains(g.element);
    record("well-formed", shapes, shapes ? "every generator conforms to the space" : "a generator does not conform to the space");
    if (!shapes) return cert;

    bool member = true;
    std::string member_detail = "every y_m is a codeword";
    for (std::size_t m = 0; m < d.generators.size() && member; ++m)
        if (!code.contains(d.generators[m].element)) {
            member = false;
            member_detail = "y_" + std::to_string(m + 1) + " = " + format_vector(d.generators[m].element) + " is not a codeword";
        }
    record("membership", member, member_detail);

    bool supported = true;
    std::string support_detail = "every y_m is supported in its window F_m";
    for (std::size_t m = 0; m < d.generators.size() && supported; ++m) {
        const auto& g = d.generators[m];
        auto [first, last] = space.support(g.element);
        const bool window_ok = g.begin <= g.end && g.end <= space.horizon();
        const bool inside = last == 0 || (g.begin <= first && last <= g.end);
        if (!window_ok || !inside) {
            supported = false;
            support_detail = "y_" + std::to_string(m + 1) + " has support [" + std::to_string(first) + "," +
                             std::to_string(last) + ") outside F_" + std::to_string(m + 1) + " = [" +
                             std::to_string(g.begin) + "," + std::to_string(g.end) + ")";
        }
    }
    record("support", supported, support_detail);

    bool orders_ok = true;
    std::string order_detail = "declared orders match";
    for (std::size_t m = 0; m < d.generators.size() && orders_ok; ++m)
        if (element_order(flat, d.generators[m].element) != d.generators[m].order) {
            orders_ok = false;
            order_detail = "y_" + std::to_string(m + 1) + " has order " +
                           std::to_string(element_order(flat, d.generators[m].element)) + ", declared " +
                           std::to_string(d.generators[m].order);
        }
    record("orders", orders_ok, order_detail);

    std::string direct_detail = "each <y_{j+1}> meets <y_1..y_j> trivially";
    const bool direct = directness_holds(code, d, direct_detail);
    record("directness", direct, direct_detail);

    bool card_ok = false;
    std::string card_detail;
    try {
        Int product = 1;
        for (const auto& g : d.generators) product = checked_mul(product, element_order(flat, g.element));
        const Int size = code.cardinality();
        card_ok = product == size;
        card_detail = "prod ord(y_m) = " + std::to_string(product) + ", |C| = " + std::to_string(size);
    } catch (const std::overflow_error&) {
        card_detail = "cardinality overflow";
    }
    record("cardinality", card_ok, card_detail);

    cert.valid = cert.first_failure.empty();
    return cert;
}

bool is_subdirect_product(const BlockCode& code, const Decomposition& d) {
    for (const auto& g : d.generators)
        if (!code.space().flat().contains(g.element)) return false;
    std::string detail;
    if (!directness_holds(code, d, detail)) return false;
    return span_of(code.space(), d.generators, d.generators.size()) == code;
}

Vector decomposition_invariants(const Decomposition& d) {
    Vector orders;
    for (const auto& g : d.generators) orders.push_back(g.order);
    return invariant_factors_from_cyclic_orders(orders);
}

namespace {

Int quotient_exponent(const BlockCode& whole, const BlockCode& part) {
    const Vector inv = quotient_invariants(whole.subgroup().basis(), part.subgroup().basis());
    return inv.empty() ? 1 : inv.back();
}

// Candidate for the next generator of the p-group `component` given the chosen span.
bool admissible(const FiniteAbelianGroup& flat, const BlockCode& chosen, const Vector& y, Int exponent, Int p) {
    const Vector killed = flat.scale(exponent, y);
    if (!std::all_of(killed.begin(), killed.end(), [](Int x) { return x == 0; })) return false;
    return !chosen.contains(flat.scale(exponent / p, y));
}

DecompositionGenerator make_generator(const SequenceSpace& space, Vector y, Int p) {
    auto [first, last] = space.support(y);
    const Int order = element_order(space.flat(), y);
    return DecompositionGenerator{std::move(y), first, last, order, p};
}

std::vector<DecompositionGenerator> greedy_primary(const BlockCode& component, Int p, Int bound) {
    const SequenceSpace& space = component.space();
    const FiniteAbelianGroup& flat = space.flat();
    std::vector<DecompositionGenerator> out;
    BlockCode chosen = zero_code(space);
    while (!(chosen == component)) {
        const Int e = quotient_exponent(component, chosen);
        std::optional<Vector> pick;
        for (std::size_t n = 1; n <= space.horizon() && !pick; ++n) {
            const Subgroup candidates = window_internal(component, 0, n).subgroup().torsion(e);
            const bool any = std::any_of(candidates.generators().begin(), candidates.generators().end(),
                                         [&](const Vector& g) { return admissible(flat, chosen, g, e, p); });
            if (!any) continue;
            if (candidates.cardinality() <= bound) {
                candidates.for_each_element([&](const Vector& y) {
                    if (admissible(flat, chosen, y, e, p) && (!pick || y < *pick)) pick = y;
                });
            } else {
                for (const auto& g : candidates.generators())
                    if (admissible(flat, chosen, g, e, p)) {
                        pick = g;
                        break;
                    }
            }
        }
        if (!pick) throw DecompositionFailure("no admissible generator found for prime " + std::to_string(p));
        chosen = join(chosen, code_from_generators(space, {*pick}));
        out.push_back(make_generator(space, std::move(*pick), p));
    }
    return out;
}

// Enumeration-based retry: scans all component elements ordered by support end, then lexicographically.
std::vector<DecompositionGenerator> exhaustive_primary(const BlockCode& component, Int p, Int bound) {
    const SequenceSpace& space = component.space();
    const FiniteAbelianGroup& flat = space.flat();
    if (component.cardinality() > bound) throw DecompositionFailure("component too large for exhaustive search");
    std::vector<Vector> elements;
    component.subgroup().for_each_element([&](const Vector& y) { elements.push_back(y); });
    std::sort(elements.begin(), elements.end(), [&](const Vector& a, const Vector& b) {
        auto ea = space.support(a).second, eb = space.support(b).second;
        return ea != eb ? ea < eb : a < b;
    });
    std::vector<DecompositionGenerator> out;
    BlockCode chosen = zero_code(space);
    while (!(chosen == component)) {
        const Int e = quotient_exponent(component, chosen);
        auto it = std::find_if(elements.begin(), elements.end(),
                               [&](const Vector& y) { return admissible(flat, chosen, y, e, p); });
        if (it == elements.end()) throw DecompositionFailure("exhaustive search found no admissible generator");
        chosen = join(chosen, code_from_generators(space, {*it}));
        out.push_back(make_generator(space, *it, p));
    }
    return out;
}

std::vector<std::pair<Int, BlockCode>> primary_components(const BlockCode& code) {
    const SequenceSpace& space = code.space();
    const FiniteAbelianGroup& flat = space.flat();
    std::vector<std::pair<Int, BlockCode>> out;
    for (const auto& [p, comp] : primary_decomposition(flat)) {
        std::vector<Vector> gens;
        for (const auto& g : code.basis()) gens.push_back(comp.embed(flat, comp.project(flat, g)));
        BlockCode part = code_from_generators(space, gens);
        if (!part.is_zero()) out.emplace_back(p, std::move(part));
    }
    return out;
}

}  // namespace

Decomposition cyclic_product_decomposition(const BlockCode& code, Int enumeration_bound) {
    const auto components = primary_components(code);
    Decomposition d;
    for (const auto& [p, part] : components) {
        auto gens = greedy_primary(part, p, enumeration_bound);
        d.generators.insert(d.generators.end(), gens.begin(), gens.end());
    }
    Certificate cert = verify_decomposition(code, d);
    if (cert.valid) return d;

    Decomposition retry;
    for (const auto& [p, part] : components) {
        auto gens = exhaustive_primary(part, p, enumeration_bound);
        retry.generators.insert(retry.generators.end(), gens.begin(), gens.end());
    }
    cert = verify_decomposition(code, retry);
    if (!cert.valid) throw DecompositionFailure("decomposition failed verification: " + cert.first_failure);
    return retry;
}

std::optional<RectangularDecomposition> coprime_rectangular(const BlockCode& code) {
    const SequenceSpace& space = code.space();
    const std::size_t n = space.horizon();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (gcd(space.symbol(i).cardinality(), space.symbol(j).cardinality()) != 1) return std::nullopt;

    RectangularDecomposition out;
    std::vector<Vector> product_gens;
    for (std::size_t i = 0; i < n; ++i) {
        const BlockCode factor = window_projection(code, i, i + 1);
        out.factors.push_back(factor.subgroup());
        for (const auto& g : factor.basis()) product_gens.push_back(space.pad(g, i));
        for (auto& y : cyclic_product_decomposition(factor).generators) {
            y.element = space.pad(y.element, i);
            y.begin = i;
            y.end = i + 1;
            out.decomposition.generators.push_back(std::move(y));
        }
    }
    if (!(code_from_generators(space, product_gens) == code))
        throw std::logic_error("coprime_rectangular: code differs from the product of its coordinate projections");
    const Certificate cert = verify_decomposition(code, out.decomposition);
    if (!cert.valid) throw std::logic_error("coprime_rectangular: " + cert.first_failure);
    return out;
}

}  // namespace abelcode
