#pragma once

/**
 * @file convolutional.hpp
 * @brief Time-invariant codes on the one-sided time axis, analysed through finite windows.
 *
 * A ConvolutionalCode over a symbol group G is given by taps, each a finite sequence over G.
 * Image form: the closure in G^N of the span of all shifts of the taps.
 * Kernel form: sequences w with sum_t pairing(w_{k+t}, h_t) = 0 for every check h and k >= 0.
 *
 * Window objects, all block codes over G^n:
 *   window_code        P_n   restriction of the closed code to [0, n)
 *   closed_window      F_n   codewords supported in [0, n), truncated
 *   finite_projection        restriction to [0, n) of the finitely supported codewords
 * The same taps also describe a code of finitely supported sequences (the sum version):
 * finite combinations of shifts, or finitely supported solutions. sum_window and
 * sum_closure_window are its F_n and the F_n of its closure. Window duality pairs the
 * closed code with the sum version of the dual taps.
 *
 * Searches over growing horizons stop once two results a memory apart agree; if the agreement
 * is not reached at the supplied margin, MarginInsufficient is thrown.
 */

#include <stdexcept>
#include <string>
#include <vector>

#include "abelcode/codes.hpp"

namespace abelcode {

enum class Form { Image, Kernel };

std::string to_string(Form form);

using Tap = std::vector<Vector>;

class ConvolutionalCode {
public:
    ConvolutionalCode(FiniteAbelianGroup symbol, Form form, std::vector<Tap> taps, std::size_t horizon = 0);

    const FiniteAbelianGroup& symbol() const { return symbol_; }
    Form form() const { return form_; }
    const std::vector<Tap>& taps() const { return taps_; }
    /// Longest tap length, at least 1.
    std::size_t memory() const { return memory_; }
    /// Analysis horizon N; 8 * memory unless given explicitly.
    std::size_t horizon() const { return horizon_; }
    bool explicit_horizon() const { return explicit_horizon_; }
    /// memory + (memory - 1) * ceil(log2 |G|) + 1: enough extension steps for the set of
    /// extendable boundary states, a decreasing chain in G^(memory-1), to stabilize.
    std::size_t default_margin() const;

    bool operator==(const ConvolutionalCode& o) const {
        return symbol_ == o.symbol_ && form_ == o.form_ && taps_ == o.taps_ && horizon_ == o.horizon_;
    }

private:
    FiniteAbelianGroup symbol_;
    Form form_;
    std::vector<Tap> taps_;
    std::size_t memory_ = 1;
    std::size_t horizon_ = 0;
    bool explicit_horizon_ = false;
};

class MarginInsufficient : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// P_n. margin = 0 selects default_margin(). Requires n >= 1.
BlockCode window_code(const ConvolutionalCode& conv, std::size_t n, std::size_t margin = 0);
/// F_n of the closed code.
BlockCode closed_window(const ConvolutionalCode& conv, std::size_t n, std::size_t margin = 0);
/// Restriction to [0, n) of the finitely supported codewords of the closed code.
BlockCode finite_projection(const ConvolutionalCode& conv, std::size_t n, std::size_t margin = 0);
/// F_n of the sum version of the taps.
BlockCode sum_window(const ConvolutionalCode& conv, std::size_t n, std::size_t margin = 0);
/// F_n of the closure of the sum version: {x : (x, 0, ..., 0) restricts the finite part}.
BlockCode sum_closure_window(const ConvolutionalCode& conv, std::size_t n, std::size_t margin = 0);

struct WeakVerdict {
    bool holds = false;
    std::size_t horizon = 0;
    /// First window length where the compared windows differ; 0 when the property holds.
    std::size_t witness = 0;
    Int larger_size = 0;   ///< size of the larger window at the witness
    Int smaller_size = 0;  ///< size of the smaller window at the witness
};

/// Finitely supported codewords are dense: P_n = finite_projection(n) for n = 1..N.
WeakVerdict weak_controllability(const ConvolutionalCode& conv);

/// Sum-version property dual to weak controllability: sum_window(n) = sum_closure_window(n)
/// for n = 1..N, so the sum code is closed in the product topology.
WeakVerdict weak_observability(const ConvolutionalCode& conv);

struct StrongIndex {
    enum class Status { Index, NotControllable, Unknown };
    Status status = Status::Unknown;
    std::size_t value = 0;  ///< least L when status is Index
    std::size_t horizon = 0;
    std::string to_string() const;
};

/// Least L with C_k(L) = C at every tested position k (k = 1..min(2 * memory, N - 1)), where
/// C_k(L) = C is checked as pi_k(F_{k+L}) = P_k and must hold at L and L + 1 within the
/// horizon. If no L fits: NotControllable when weak controllability fails, otherwise Unknown.
StrongIndex strong_controllability_index(const ConvolutionalCode& conv);

/// Swaps image and kernel form over the same symbol moduli and keeps the taps. With checks
/// paired against shifts as above, the annihilator of the shifts of g is the kernel of g.
ConvolutionalCode dual_convolutional(const ConvolutionalCode& conv);

struct ConvolutionalDualityReport {
    std::size_t horizon = 0;
    /// window_code(C, n)^perp == sum_window(dual, n), n = 1..N.
    std::vector<bool> window_checks;
    /// finite_projection(C, n)^perp == sum_closure_window(dual, n), n = 1..N.
    std::vector<bool> finite_checks;
    WeakVerdict controllability;   ///< of C
    WeakVerdict dual_observability;  ///< of the dual, sum version
    bool passed() const;
    std::string first_failure() const;
};

ConvolutionalDualityReport check_convolutional_duality(const ConvolutionalCode& conv);

}  // namespace abelcode
