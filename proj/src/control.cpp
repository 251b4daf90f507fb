#include "abelcode/control.hpp"

#include <algorithm>

namespace abelcode {

BlockCode reachable_set(const BlockCode& code, std::size_t k, std::size_t window) {
    const std::size_t n = code.horizon();
    if (k >= n)
        throw std::out_of_range("reachable_set: position " + std::to_string(k) + " outside horizon " + std::to_string(n));
    const std::size_t tail = std::min(n, k + window);
    return join(window_internal(code, k, n), window_internal(code, 0, tail));
}

ControlProfile control_profile(const BlockCode& code) {
    ControlProfile out;
    const std::size_t n = code.horizon();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t l = 0;
        while (k + l < n && !(reachable_set(code, k, l) == code)) ++l;
        out.lengths.push_back(l);
        out.index = std::max(out.index, l);
    }
    return out;
}

std::vector<Chunk> chunk_decompose(const BlockCode& code, std::span<const Int> w, std::span<const std::size_t> lengths) {
    const SequenceSpace& space = code.space();
    const std::size_t n = code.horizon();
    if (lengths.size() != n)
        throw std::invalid_argument("chunk_decompose: expected " + std::to_string(n) + " window lengths");
    if (!code.contains(w)) throw std::invalid_argument("chunk_decompose: " + format_vector(w) + " is not a codeword");
    const FiniteAbelianGroup& flat = space.flat();
    std::vector<Chunk> chunks;
    Vector rest(w.begin(), w.end());
    for (;;) {
        auto [k, last] = space.support(rest);
        if (last == 0) break;
        const std::size_t end = k + 1 < n ? std::min(n, k + 1 + lengths[k + 1]) : n;
        const BlockCode local = window_internal(code, k, end);
        const auto piv = pivot_columns(local.subgroup().basis());
        Vector target = rest;
        Vector chunk = flat.zero();
        for (std::size_t i = 0; i < piv.size(); ++i) {
            if (piv[i] < space.offset(k) || piv[i] >= space.offset(k + 1)) continue;
            const Vector& row = local.basis()[i];
            const Int d = row[piv[i]];
            if (target[piv[i]] % d != 0) break;
            const Int q = target[piv[i]] / d;
            chunk = flat.add(chunk, flat.scale(q, row));
            target = flat.add(target, flat.scale(-q, row));
        }
        for (std::size_t c = space.offset(k); c < space.offset(k + 1); ++c)
            if (target[c] != 0)
                throw ProfileInsufficient(k, "chunk_decompose: window [" + std::to_string(k) + "," + std::to_string(end) +
                                                 ") cannot clear time " + std::to_string(k));
        rest = flat.add(rest, flat.negate(chunk));
        chunks.push_back(Chunk{std::move(chunk), k, end});
    }
    return chunks;
}

std::vector<std::size_t> split_profile(const BlockCode& code) {
    const std::size_t n = code.horizon();
    std::vector<std::size_t> out;
    for (std::size_t l = 0; l <= n; ++l) {
        const BlockCode tail = window_internal(code, l, n);
        std::size_t bound = l;
        while (bound < n && !(join(window_internal(code, 0, bound), tail) == code)) ++bound;
        out.push_back(bound);
    }
    return out;
}

namespace {

std::vector<Int> divisors(Int e) {
    std::vector<Int> out;
    for (Int d = 1; d <= e; ++d)
        if (e % d == 0) out.push_back(d);
    return out;
}

// Whether every codeword admits an order-bounded split for prefix length l and bound n.
bool order_split_holds(const BlockCode& code, std::size_t l, std::size_t n, Int enumeration_bound) {
    const SequenceSpace& space = code.space();
    const std::size_t total = code.horizon();
    const BlockCode prefix_part = window_internal(code, 0, n);
    if (!(join(prefix_part, window_internal(code, l, total)) == code)) return false;

    const auto coords = space.coordinates(0, n);
    const Subgroup prefix = prefix_part.subgroup().project(coords);
    const Subgroup overlap = window_internal(code, l, n).subgroup().project(coords);
    const Subgroup heads = code.subgroup().project(coords);
    const FiniteAbelianGroup& group = heads.ambient();
    if (heads.cardinality() > enumeration_bound)
        throw std::length_error("order_profile: window projection exceeds the enumeration bound");

    const std::size_t prefix_width = space.offset(l);
    const auto prefix_pivots = pivot_columns(prefix.basis());
    const auto all_orders = divisors(group.exponent());

    std::vector<std::pair<Int, ResidueMatrix>> scaled_overlap;
    for (Int o : all_orders) {
        std::vector<Vector> rows;
        for (const auto& g : overlap.generators()) rows.push_back(group.scale(o, g));
        if (rows.empty()) rows.push_back(group.zero());
        scaled_overlap.emplace_back(o, ResidueMatrix(group.moduli(), std::move(rows)));
    }

    bool ok = true;
    heads.for_each_element([&](const Vector& head) {
        if (!ok) return;
        // c1 must agree with the codeword on [0, l)
        Vector target = head;
        for (std::size_t c = prefix_width; c < target.size(); ++c) target[c] = 0;
        Vector c1 = group.zero();
        for (std::size_t i = 0; i < prefix_pivots.size() && prefix_pivots[i] < prefix_width; ++i) {
            const Vector& row = prefix.generators()[i];
            const Int q = target[prefix_pivots[i]] / row[prefix_pivots[i]];
            c1 = group.add(c1, group.scale(q, row));
            target = group.add(target, group.scale(-q, row));
        }
        const Int bound = element_order(group, head);
        if (element_order(group, c1) <= bound) return;
        for (const auto& [o, system] : scaled_overlap) {
            if (o > bound) break;
            if (solve_congruence_system(system, group.negate(group.scale(o, c1)))) return;
        }
        ok = false;
    });
    return ok;
}

}  // namespace

OrderProfile order_profile(const BlockCode& code, Int enumeration_bound) {
    OrderProfile out;
    const std::size_t n = code.horizon();
    for (std::size_t l = 0; l <= n; ++l) {
        std::size_t bound = l;
        while (bound < n && !order_split_holds(code, l, bound, enumeration_bound)) ++bound;
        out.bounds.push_back(bound);
        out.margin = std::max(out.margin, bound - l);
    }
    out.uniform_margin = true;
    return out;
}

}  // namespace abelcode
