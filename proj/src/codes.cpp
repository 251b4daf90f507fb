#include "abelcode/codes.hpp"

#include <stdexcept>

#include "abelcode/duality.hpp"

namespace abelcode {

namespace {

void check_window(const SequenceSpace& space, std::size_t a, std::size_t b, const char* what) {
    if (a > b || b > space.horizon())
        throw std::out_of_range(std::string(what) + ": window [" + std::to_string(a) + "," + std::to_string(b) +
                                ") outside horizon " + std::to_string(space.horizon()));
}

}  // namespace

SequenceSpace::SequenceSpace(std::vector<FiniteAbelianGroup> symbols) : symbols_(std::move(symbols)) {
    offsets_.reserve(symbols_.size() + 1);
    std::size_t off = 0;
    Vector moduli;
    for (const auto& s : symbols_) {
        offsets_.push_back(off);
        off += s.rank();
        moduli.insert(moduli.end(), s.moduli().begin(), s.moduli().end());
    }
    offsets_.push_back(off);
    flat_ = FiniteAbelianGroup(std::move(moduli));
}

SequenceSpace SequenceSpace::uniform(const FiniteAbelianGroup& symbol, std::size_t horizon) {
    return SequenceSpace(std::vector<FiniteAbelianGroup>(horizon, symbol));
}

std::vector<std::size_t> SequenceSpace::coordinates(std::size_t a, std::size_t b) const {
    std::vector<std::size_t> out;
    for (std::size_t c = offsets_.at(a); c < offsets_.at(b); ++c) out.push_back(c);
    return out;
}

std::vector<std::size_t> SequenceSpace::coordinates_outside(std::size_t a, std::size_t b) const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < offsets_.at(a); ++c) out.push_back(c);
    for (std::size_t c = offsets_.at(b); c < offsets_.back(); ++c) out.push_back(c);
    return out;
}

SequenceSpace SequenceSpace::window(std::size_t a, std::size_t b) const {
    check_window(*this, a, b, "SequenceSpace::window");
    return SequenceSpace(std::vector<FiniteAbelianGroup>(symbols_.begin() + static_cast<std::ptrdiff_t>(a),
                                                         symbols_.begin() + static_cast<std::ptrdiff_t>(b)));
}

Vector SequenceSpace::at(std::span<const Int> element, std::size_t t) const {
    return Vector(element.begin() + static_cast<std::ptrdiff_t>(offsets_.at(t)),
                  element.begin() + static_cast<std::ptrdiff_t>(offsets_.at(t + 1)));
}

std::pair<std::size_t, std::size_t> SequenceSpace::support(std::span<const Int> element) const {
    std::size_t first = horizon(), last = 0;
    for (std::size_t t = 0; t < horizon(); ++t)
        for (std::size_t c = offsets_[t]; c < offsets_[t + 1]; ++c)
            if (element[c] != 0) {
                first = std::min(first, t);
                last = t + 1;
            }
    if (first == horizon()) return {0, 0};
    return {first, last};
}

Vector SequenceSpace::pad(std::span<const Int> window_element, std::size_t a) const {
    Vector out = flat_.zero();
    const std::size_t base = offsets_.at(a);
    if (base + window_element.size() > out.size()) throw std::out_of_range("SequenceSpace::pad: element too long");
    for (std::size_t k = 0; k < window_element.size(); ++k) out[base + k] = window_element[k];
    return out;
}

BlockCode::BlockCode(SequenceSpace space, Subgroup subgroup) : space_(std::move(space)), subgroup_(std::move(subgroup)) {
    if (subgroup_.ambient() != space_.flat()) throw std::invalid_argument("BlockCode: subgroup not in the sequence space");
}

bool BlockCode::is_subcode_of(const BlockCode& other) const {
    return space_ == other.space_ && subgroup_.is_subgroup_of(other.subgroup_);
}

BlockCode code_from_generators(const SequenceSpace& space, const std::vector<Vector>& generators) {
    for (const auto& g : generators)
        if (g.size() != space.flat().rank())
            throw std::invalid_argument("code_from_generators: generator " + format_vector(g) + " has " +
                                        std::to_string(g.size()) + " coordinates, space has " +
                                        std::to_string(space.flat().rank()));
    return BlockCode(space, Subgroup(space.flat(), generators));
}

BlockCode zero_code(const SequenceSpace& space) { return BlockCode(space, Subgroup::zero(space.flat())); }

BlockCode ambient_code(const SequenceSpace& space) { return BlockCode(space, Subgroup::whole(space.flat())); }

BlockCode intersect(const BlockCode& a, const BlockCode& b) {
    if (!(a.space() == b.space())) throw std::invalid_argument("intersect: codes live in different spaces");
    const Subgroup sum_of_duals = annihilator(a.subgroup()).join(annihilator(b.subgroup()));
    return BlockCode(a.space(), annihilator(sum_of_duals));
}

BlockCode join(const BlockCode& a, const BlockCode& b) {
    if (!(a.space() == b.space())) throw std::invalid_argument("join: codes live in different spaces");
    return BlockCode(a.space(), a.subgroup().join(b.subgroup()));
}

BlockCode window_projection(const BlockCode& code, std::size_t a, std::size_t b) {
    check_window(code.space(), a, b, "window_projection");
    auto coords = code.space().coordinates(a, b);
    return BlockCode(code.space().window(a, b), code.subgroup().project(coords));
}

BlockCode window_internal(const BlockCode& code, std::size_t a, std::size_t b) {
    check_window(code.space(), a, b, "window_internal");
    auto outside = code.space().coordinates_outside(a, b);
    return BlockCode(code.space(), code.subgroup().vanishing_on(outside));
}

BlockCode pullback(const SequenceSpace& space, const BlockCode& window_code, std::size_t a) {
    const std::size_t b = a + window_code.horizon();
    check_window(space, a, b, "pullback");
    if (!(space.window(a, b) == window_code.space())) throw std::invalid_argument("pullback: window space mismatch");
    std::vector<Vector> gens;
    for (const auto& g : window_code.basis()) gens.push_back(space.pad(g, a));
    for (std::size_t c : space.coordinates_outside(a, b)) {
        Vector e = space.flat().zero();
        if (space.flat().moduli()[c] == 1) continue;
        e[c] = 1;
        gens.push_back(std::move(e));
    }
    return BlockCode(space, Subgroup(space.flat(), std::move(gens)));
}

Vector invariant_factors_of_code(const BlockCode& code) { return code.subgroup().invariant_factors(); }

}  // namespace abelcode
