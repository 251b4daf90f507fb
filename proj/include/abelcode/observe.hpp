#pragma once

/**
 * @file observe.hpp
 * @brief Observability family for block codes and the control/observe duality report.
 *
 * Observation windows are closed: consistency at position k with parameter L looks at the
 * L+1 symbols [k, k+L], i.e. [k, k+L+1) in half-open notation, clipped to the horizon.
 */

#include <string>
#include <vector>

#include "abelcode/codes.hpp"
#include "abelcode/control.hpp"

namespace abelcode {

/// Sequences whose restriction to [k, k+L] is the restriction of some codeword.
BlockCode consistency_set(const BlockCode& code, std::size_t k, std::size_t window);

/// Intersection over k of consistency_set(C, k, L). Contains C and decreases with L.
BlockCode observable_supercode(const BlockCode& code, std::size_t window);

struct ObserveProfile {
    /// Per-position closed-window parameters L_k with the intersection of the sets
    /// consistency_set(C, k, L_k) equal to C. Obtained by lowering each position in turn,
    /// starting from the uniform index, so reducing any single L_k > 0 enlarges the intersection.
    std::vector<std::size_t> lengths;
    /// Least uniform L with observable_supercode(C, L) = C.
    std::size_t index = 0;
};

ObserveProfile observe_profile(const BlockCode& code);

/// Intersection over k of reachable_set(C, k, L): the part of C reachable with memory L.
BlockCode controllable_subcode(const BlockCode& code, std::size_t window);

struct WindowCheck {
    std::size_t begin = 0;
    std::size_t end = 0;
    bool holds = false;
};

struct ChainCheck {
    std::size_t position = 0;
    std::size_t window = 0;
    bool annihilator_matches = false;  ///< C_k(L)^perp = two-window consistency set of C^perp
    bool chain_reversed = false;       ///< C_k(L)^perp contains C_k(L+1)^perp
};

struct DualityReport {
    BlockCode dual;
    ControlProfile control;             ///< of C
    ObserveProfile dual_observe;        ///< of C^perp
    ControlProfile dual_control;        ///< of C^perp
    ObserveProfile observe;             ///< of C
    /// window_internal(C, a, b)^perp equals the pullback of C^perp restricted to [a, b).
    std::vector<WindowCheck> window_checks;
    /// Per (k, L) annihilator and order-reversal checks for the reachable-set chains.
    std::vector<ChainCheck> chain_checks;
    /// controllable_subcode(C, L)^perp == observable_supercode(C^perp, L), per L = 0..N.
    std::vector<bool> subcode_supercode;
    /// Strong index finite for C iff finite for C^perp (always within a finite horizon).
    bool property_equivalence = false;
    /// Diagnostic only: control index of C equals observe index of C^perp and vice versa.
    bool index_match = false;

    bool passed() const;
    /// Human-readable description of the first failure, empty when passed.
    std::string first_failure() const;
};

DualityReport check_control_observe_duality(const BlockCode& code);

}  // namespace abelcode
