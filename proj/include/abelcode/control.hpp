#pragma once

/**
 * @file control.hpp
 * @brief Controllability family for block codes.
 *
 * Reachable sets use half-open windows: C_k(L) constrains the witness to vanish on [0, k)
 * and to agree with c on [k+L, N). Tail constraints that reach past the horizon are vacuous.
 *
 * Relation with prefix splits: a code satisfies C_k(L) = C exactly when every codeword
 * splits as c1 + c2 with c1 supported in [0, k+L) and c2 supported in [k, N). The minimal
 * plain split bound for prefix length k is therefore k + L_k.
 */

#include <stdexcept>
#include <string>
#include <vector>

#include "abelcode/codes.hpp"

namespace abelcode {

/// C_k(L). Throws std::out_of_range unless k < N.
BlockCode reachable_set(const BlockCode& code, std::size_t k, std::size_t window);

struct ControlProfile {
    /// Minimal L with C_k(L) = C, for k = 0..N-1.
    std::vector<std::size_t> lengths;
    /// max_k lengths[k]; the code is L-controllable exactly for L >= index.
    std::size_t index = 0;

    bool is_l_controllable(std::size_t l) const { return l >= index; }
};

ControlProfile control_profile(const BlockCode& code);

struct Chunk {
    Vector element;
    std::size_t begin = 0;  ///< chunk lies in window_internal(C, begin, end)
    std::size_t end = 0;
};

class ProfileInsufficient : public std::runtime_error {
public:
    ProfileInsufficient(std::size_t position, const std::string& what) : std::runtime_error(what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Greedy left-to-right decomposition of w into codewords supported on short windows. The
/// chunk that clears the first nonzero time k lives in [k, k + 1 + lengths[k+1]) (up to N),
/// which is the window guaranteed by C_{k+1}(lengths[k+1]) = C. Among admissible chunks the
/// one reduced against the Howell basis of that window subcode is chosen.
/// Throws std::invalid_argument if w is not a codeword, ProfileInsufficient if the lengths
/// do not allow the lowest nonzero symbol to be cleared.
std::vector<Chunk> chunk_decompose(const BlockCode& code, std::span<const Int> w, std::span<const std::size_t> lengths);

struct OrderProfile {
    /// bounds[l] = least n >= l such that every codeword splits c = c1 + c2 with
    /// c1 in C supported in [0, n), c2 in C supported in [l, N) and
    /// order(c1) <= order(c restricted to [0, n)); l = 0..N.
    std::vector<std::size_t> bounds;
    /// max_l (bounds[l] - l).
    std::size_t margin = 0;
    /// Whether the margin stays below the horizon bound; always true for block codes.
    bool uniform_margin = true;
};

/// Default ceiling on the number of window elements enumerated by order_profile.
inline constexpr Int kDefaultEnumerationBound = Int{1} << 20;

/// Throws std::length_error if a window projection exceeds the enumeration bound.
OrderProfile order_profile(const BlockCode& code, Int enumeration_bound = kDefaultEnumerationBound);

/// Least n >= l with C = window_internal(C, 0, n) + window_internal(C, l, N), for l = 0..N.
std::vector<std::size_t> split_profile(const BlockCode& code);

}  // namespace abelcode
