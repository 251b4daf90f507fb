#pragma once

/**
 * @file codes.hpp
 * @brief Finite sequence spaces and block group codes.
 *
 * Time indices are 0-based and windows are half-open [a, b). A closed window written
 * [k, k+L] (L+1 symbols) in the literature corresponds to [k, k+L+1) here, and a 1-based
 * closed interval [1, n] corresponds to [0, n).
 */

#include <span>
#include <string>
#include <vector>

#include "abelcode/groups.hpp"

namespace abelcode {

/// G_0 x G_1 x ... x G_{N-1}; elements are flat vectors of concatenated symbol coordinates.
class SequenceSpace {
public:
    SequenceSpace() = default;
    explicit SequenceSpace(std::vector<FiniteAbelianGroup> symbols);
    static SequenceSpace uniform(const FiniteAbelianGroup& symbol, std::size_t horizon);

    std::size_t horizon() const { return symbols_.size(); }
    const std::vector<FiniteAbelianGroup>& symbols() const { return symbols_; }
    const FiniteAbelianGroup& symbol(std::size_t t) const { return symbols_.at(t); }
    const FiniteAbelianGroup& flat() const { return flat_; }

    /// First flat coordinate of time t (t == horizon gives the total width).
    std::size_t offset(std::size_t t) const { return offsets_.at(t); }
    /// Flat coordinates of times in [a, b).
    std::vector<std::size_t> coordinates(std::size_t a, std::size_t b) const;
    /// Flat coordinates of times outside [a, b).
    std::vector<std::size_t> coordinates_outside(std::size_t a, std::size_t b) const;
    SequenceSpace window(std::size_t a, std::size_t b) const;

    /// Symbol at time t of a flat element.
    Vector at(std::span<const Int> element, std::size_t t) const;
    /// Smallest [a, b) containing every nonzero symbol ([0, 0) for the zero element).
    std::pair<std::size_t, std::size_t> support(std::span<const Int> element) const;
    /// Zero-pads an element of window(a, b) into the full space.
    Vector pad(std::span<const Int> window_element, std::size_t a) const;

    bool operator==(const SequenceSpace& o) const { return symbols_ == o.symbols_; }

private:
    std::vector<FiniteAbelianGroup> symbols_;
    std::vector<std::size_t> offsets_;
    FiniteAbelianGroup flat_;
};

/// A subgroup of a finite sequence space, stored canonically (Howell basis).
class BlockCode {
public:
    BlockCode() = default;
    BlockCode(SequenceSpace space, Subgroup subgroup);

    const SequenceSpace& space() const { return space_; }
    const Subgroup& subgroup() const { return subgroup_; }
    const std::vector<Vector>& basis() const { return subgroup_.generators(); }
    std::size_t horizon() const { return space_.horizon(); }

    bool contains(std::span<const Int> c) const { return subgroup_.contains(c); }
    bool is_subcode_of(const BlockCode& other) const;
    Int cardinality() const { return subgroup_.cardinality(); }
    bool is_zero() const { return subgroup_.is_zero(); }

    bool operator==(const BlockCode& o) const { return space_ == o.space_ && subgroup_ == o.subgroup_; }

private:
    SequenceSpace space_;
    Subgroup subgroup_;
};

BlockCode code_from_generators(const SequenceSpace& space, const std::vector<Vector>& generators);
BlockCode zero_code(const SequenceSpace& space);
BlockCode ambient_code(const SequenceSpace& space);

/// Exact intersection, computed as (A^perp + B^perp)^perp.
BlockCode intersect(const BlockCode& a, const BlockCode& b);
BlockCode join(const BlockCode& a, const BlockCode& b);

/// Image of C under deletion of the symbols outside [a, b); lives in space.window(a, b).
BlockCode window_projection(const BlockCode& code, std::size_t a, std::size_t b);
/// Codewords supported inside [a, b) (same ambient space).
BlockCode window_internal(const BlockCode& code, std::size_t a, std::size_t b);
/// Preimage in the full space of a code living on window [a, b).
BlockCode pullback(const SequenceSpace& space, const BlockCode& window_code, std::size_t a);

Vector invariant_factors_of_code(const BlockCode& code);

}  // namespace abelcode
