#include "abelcode/observe.hpp"

#include <algorithm>

#include "abelcode/duality.hpp"

namespace abelcode {

BlockCode consistency_set(const BlockCode& code, std::size_t k, std::size_t window) {
    const std::size_t n = code.horizon();
    if (k >= n)
        throw std::out_of_range("consistency_set: position " + std::to_string(k) + " outside horizon " + std::to_string(n));
    const std::size_t end = std::min(n, k + window + 1);
    return pullback(code.space(), window_projection(code, k, end), k);
}

namespace {

BlockCode intersect_consistency(const BlockCode& code, std::span<const std::size_t> lengths) {
    BlockCode out = ambient_code(code.space());
    for (std::size_t k = 0; k < code.horizon(); ++k) out = intersect(out, consistency_set(code, k, lengths[k]));
    return out;
}

}  // namespace

BlockCode observable_supercode(const BlockCode& code, std::size_t window) {
    return intersect_consistency(code, std::vector<std::size_t>(code.horizon(), window));
}

ObserveProfile observe_profile(const BlockCode& code) {
    ObserveProfile out;
    const std::size_t n = code.horizon();
    while (out.index + 1 < n && !(observable_supercode(code, out.index) == code)) ++out.index;
    out.lengths.assign(n, out.index);
    for (std::size_t k = 0; k < n; ++k) {
        out.lengths[k] = std::min(out.lengths[k], n - 1 - k);
        while (out.lengths[k] > 0) {
            --out.lengths[k];
            if (!(intersect_consistency(code, out.lengths) == code)) {
                ++out.lengths[k];
                break;
            }
        }
    }
    return out;
}

BlockCode controllable_subcode(const BlockCode& code, std::size_t window) {
    BlockCode out = code;
    for (std::size_t k = 0; k < code.horizon(); ++k) out = intersect(out, reachable_set(code, k, window));
    return out;
}

bool DualityReport::passed() const { return first_failure().empty(); }

std::string DualityReport::first_failure() const {
    for (const auto& w : window_checks)
        if (!w.holds)
            return "annihilator of window_internal [" + std::to_string(w.begin) + "," + std::to_string(w.end) +
                   ") differs from the dual consistency pullback";
    for (const auto& c : chain_checks) {
        if (!c.annihilator_matches)
            return "annihilator of C_" + std::to_string(c.position) + "(" + std::to_string(c.window) +
                   ") differs from the two-window dual consistency set";
        if (!c.chain_reversed)
            return "dual chain not reversed at C_" + std::to_string(c.position) + "(" + std::to_string(c.window) + ")";
    }
    for (std::size_t l = 0; l < subcode_supercode.size(); ++l)
        if (!subcode_supercode[l])
            return "controllable subcode annihilator differs from the dual observable supercode at L=" + std::to_string(l);
    if (!property_equivalence) return "strong controllability and dual strong observability disagree";
    return {};
}

DualityReport check_control_observe_duality(const BlockCode& code) {
    DualityReport r;
    const SequenceSpace& space = code.space();
    const std::size_t n = code.horizon();
    r.dual = dual_block_code(code);
    r.control = control_profile(code);
    r.observe = observe_profile(code);
    r.dual_control = control_profile(r.dual);
    r.dual_observe = observe_profile(r.dual);

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b <= n; ++b) {
            const BlockCode lhs = dual_block_code(window_internal(code, a, b));
            const BlockCode rhs = pullback(space, window_projection(r.dual, a, b), a);
            r.window_checks.push_back({a, b, lhs == rhs});
        }

    for (std::size_t k = 0; k < n; ++k) {
        const BlockCode future = pullback(space, window_projection(r.dual, k, n), k);
        BlockCode previous_perp = dual_block_code(reachable_set(code, k, 0));
        for (std::size_t l = 0; k + l <= n; ++l) {
            const BlockCode perp = previous_perp;
            const std::size_t head = std::min(n, k + l);
            const BlockCode past = pullback(space, window_projection(r.dual, 0, head), 0);
            ChainCheck c{k, l, perp == intersect(future, past), true};
            if (k + l < n) {
                const BlockCode next_perp = dual_block_code(reachable_set(code, k, l + 1));
                c.chain_reversed = next_perp.is_subcode_of(perp);
                previous_perp = next_perp;
            }
            r.chain_checks.push_back(c);
        }
    }

    for (std::size_t l = 0; l <= n; ++l)
        r.subcode_supercode.push_back(dual_block_code(controllable_subcode(code, l)) == observable_supercode(r.dual, l));

    // Within a finite horizon both indices exist; the check records that they were found.
    r.property_equivalence = r.control.index <= n && r.dual_observe.index <= n;
    r.index_match = r.control.index == r.dual_observe.index && r.dual_control.index == r.observe.index;
    return r;
}

}  // namespace abelcode
