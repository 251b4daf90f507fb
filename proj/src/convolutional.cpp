#include "abelcode/convolutional.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "abelcode/duality.hpp"

namespace abelcode {

std::string to_string(Form form) { return form == Form::Image ? "image" : "kernel"; }

ConvolutionalCode::ConvolutionalCode(FiniteAbelianGroup symbol, Form form, std::vector<Tap> taps, std::size_t horizon)
    : symbol_(std::move(symbol)), form_(form), taps_(std::move(taps)) {
    for (std::size_t i = 0; i < taps_.size(); ++i) {
        if (taps_[i].empty()) throw std::invalid_argument("tap " + std::to_string(i) + " is empty");
        for (const auto& entry : taps_[i]) symbol_.validate(entry);
        memory_ = std::max(memory_, taps_[i].size());
    }
    explicit_horizon_ = horizon != 0;
    horizon_ = explicit_horizon_ ? horizon : 8 * memory_;
}

std::size_t ConvolutionalCode::default_margin() const {
    std::size_t bits = 0;
    for (Int size = symbol_.cardinality(); (Int{1} << bits) < size;) ++bits;
    return memory_ + (memory_ - 1) * bits + 1;
}

namespace {

SequenceSpace line(const ConvolutionalCode& conv, std::size_t length) {
    return SequenceSpace::uniform(conv.symbol(), length);
}

// Tap shifted to start at s, cut off at the horizon of the space.
Vector shifted(const SequenceSpace& space, const Tap& tap, std::size_t s) {
    Vector out = space.flat().zero();
    for (std::size_t t = 0; t < tap.size() && s + t < space.horizon(); ++t)
        std::copy(tap[t].begin(), tap[t].end(), out.begin() + static_cast<std::ptrdiff_t>(space.offset(s + t)));
    return out;
}

// Span of shifts s < shifts, cut at the horizon.
BlockCode shift_span(const ConvolutionalCode& conv, std::size_t length, std::size_t shifts) {
    const SequenceSpace space = line(conv, length);
    std::vector<Vector> gens;
    for (const auto& tap : conv.taps())
        for (std::size_t s = 0; s < shifts; ++s) gens.push_back(shifted(space, tap, s));
    return code_from_generators(space, gens);
}

// Sequences of the given length satisfying every shifted check that fits entirely.
BlockCode kernel_solutions(const ConvolutionalCode& conv, std::size_t length) {
    const SequenceSpace space = line(conv, length);
    std::vector<Vector> checks;
    for (const auto& tap : conv.taps())
        for (std::size_t s = 0; s + tap.size() <= length; ++s) checks.push_back(shifted(space, tap, s));
    return BlockCode(space, annihilator(Subgroup(space.flat(), checks)));
}

BlockCode head(const BlockCode& code, std::size_t n) { return window_projection(code, 0, n); }

BlockCode supported_head(const BlockCode& code, std::size_t n) { return head(window_internal(code, 0, n), n); }

std::size_t effective_margin(const ConvolutionalCode& conv, std::size_t margin) {
    return margin == 0 ? conv.default_margin() : margin;
}

BlockCode stabilized(const ConvolutionalCode& conv, std::size_t margin, const std::function<BlockCode(std::size_t)>& at,
                     const char* what, std::size_t n) {
    const std::size_t m = effective_margin(conv, margin);
    BlockCode first = at(m);
    if (!(first == at(m + conv.memory())))
        throw MarginInsufficient(std::string(what) + ": margin " + std::to_string(m) + " insufficient at n=" +
                                 std::to_string(n));
    return first;
}

void require_length(std::size_t n) {
    if (n == 0) throw std::invalid_argument("window length must be at least 1");
}

}  // namespace

BlockCode window_code(const ConvolutionalCode& conv, std::size_t n, std::size_t margin) {
    require_length(n);
    if (conv.form() == Form::Image) return shift_span(conv, n, n);
    return stabilized(conv, margin, [&](std::size_t m) { return head(kernel_solutions(conv, n + m), n); },
                      "window_code", n);
}

BlockCode closed_window(const ConvolutionalCode& conv, std::size_t n, std::size_t margin) {
    require_length(n);
    if (conv.form() == Form::Kernel) return supported_head(kernel_solutions(conv, n + conv.memory() - 1), n);
    return stabilized(conv, margin, [&](std::size_t t) { return supported_head(shift_span(conv, n + t, n + t), n); },
                      "closed_window", n);
}

BlockCode finite_projection(const ConvolutionalCode& conv, std::size_t n, std::size_t margin) {
    require_length(n);
    if (conv.form() == Form::Image) return window_code(conv, n);
    return stabilized(conv, margin, [&](std::size_t m) { return head(closed_window(conv, n + m), n); },
                      "finite_projection", n);
}

BlockCode sum_window(const ConvolutionalCode& conv, std::size_t n, std::size_t margin) {
    require_length(n);
    if (conv.form() == Form::Kernel) return closed_window(conv, n);
    return stabilized(conv, margin,
                      [&](std::size_t m) {
                          const std::size_t shifts = n + m;
                          return supported_head(shift_span(conv, shifts + conv.memory() - 1, shifts), n);
                      },
                      "sum_window", n);
}

BlockCode sum_closure_window(const ConvolutionalCode& conv, std::size_t n, std::size_t margin) {
    require_length(n);
    if (conv.form() == Form::Image) return closed_window(conv, n, margin);
    return stabilized(conv, margin,
                      [&](std::size_t t) { return supported_head(finite_projection(conv, n + t, margin), n); },
                      "sum_closure_window", n);
}

namespace {

WeakVerdict compare_windows(const ConvolutionalCode& conv, const std::function<BlockCode(std::size_t)>& larger,
                            const std::function<BlockCode(std::size_t)>& smaller) {
    WeakVerdict v;
    v.horizon = conv.horizon();
    for (std::size_t n = 1; n <= conv.horizon(); ++n) {
        const BlockCode big = larger(n);
        const BlockCode small = smaller(n);
        if (!(big == small)) {
            v.witness = n;
            v.larger_size = big.cardinality();
            v.smaller_size = small.cardinality();
            return v;
        }
    }
    v.holds = true;
    return v;
}

}  // namespace

WeakVerdict weak_controllability(const ConvolutionalCode& conv) {
    return compare_windows(conv, [&](std::size_t n) { return window_code(conv, n); },
                           [&](std::size_t n) { return finite_projection(conv, n); });
}

WeakVerdict weak_observability(const ConvolutionalCode& conv) {
    return compare_windows(conv, [&](std::size_t n) { return sum_closure_window(conv, n); },
                           [&](std::size_t n) { return sum_window(conv, n); });
}

std::string StrongIndex::to_string() const {
    switch (status) {
        case Status::Index: return std::to_string(value);
        case Status::NotControllable: return "not controllable within horizon " + std::to_string(horizon);
        case Status::Unknown: break;
    }
    return "unknown beyond horizon " + std::to_string(horizon);
}

StrongIndex strong_controllability_index(const ConvolutionalCode& conv) {
    StrongIndex out;
    out.horizon = conv.horizon();
    const std::size_t n = conv.horizon();
    const std::size_t last = n == 0 ? 0 : std::min(2 * conv.memory(), n - 1);
    std::map<std::size_t, BlockCode> closed;
    auto closed_at = [&](std::size_t m) -> const BlockCode& {
        auto it = closed.find(m);
        if (it == closed.end()) it = closed.emplace(m, closed_window(conv, m)).first;
        return it->second;
    };
    bool found_all = true;
    for (std::size_t k = 1; k <= last && found_all; ++k) {
        const BlockCode target = window_code(conv, k);
        auto reaches = [&](std::size_t l) { return head(closed_at(k + l), k) == target; };
        bool found = false;
        for (std::size_t l = 0; k + l + 1 <= n; ++l)
            if (reaches(l) && reaches(l + 1)) {
                out.value = std::max(out.value, l);
                found = true;
                break;
            }
        found_all = found;
    }
    if (found_all) {
        out.status = StrongIndex::Status::Index;
        return out;
    }
    out.value = 0;
    out.status = weak_controllability(conv).holds ? StrongIndex::Status::Unknown : StrongIndex::Status::NotControllable;
    return out;
}

ConvolutionalCode dual_convolutional(const ConvolutionalCode& conv) {
    return ConvolutionalCode(conv.symbol(), conv.form() == Form::Image ? Form::Kernel : Form::Image, conv.taps(),
                             conv.explicit_horizon() ? conv.horizon() : 0);
}

bool ConvolutionalDualityReport::passed() const { return first_failure().empty(); }

std::string ConvolutionalDualityReport::first_failure() const {
    for (std::size_t i = 0; i < window_checks.size(); ++i)
        if (!window_checks[i])
            return "annihilator of window_code at n=" + std::to_string(i + 1) + " differs from the dual sum window";
    for (std::size_t i = 0; i < finite_checks.size(); ++i)
        if (!finite_checks[i])
            return "annihilator of finite_projection at n=" + std::to_string(i + 1) +
                   " differs from the dual sum closure window";
    if (controllability.holds != dual_observability.holds)
        return "weak controllability and dual weak observability disagree";
    return {};
}

ConvolutionalDualityReport check_convolutional_duality(const ConvolutionalCode& conv) {
    ConvolutionalDualityReport r;
    const ConvolutionalCode dual = dual_convolutional(conv);
    r.horizon = conv.horizon();
    for (std::size_t n = 1; n <= conv.horizon(); ++n) {
        r.window_checks.push_back(dual_block_code(window_code(conv, n)) == sum_window(dual, n));
        r.finite_checks.push_back(dual_block_code(finite_projection(conv, n)) == sum_closure_window(dual, n));
    }
    r.controllability = weak_controllability(conv);
    r.dual_observability = weak_observability(dual);
    return r;
}

}  // namespace abelcode
