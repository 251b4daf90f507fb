#pragma once

/**
 * @file oracle.hpp
 * @brief Brute-force reference implementations over explicitly enumerated codes.
 *
 * Everything here works from element lists and group arithmetic alone, never from
 * canonical forms, so agreement with the main modules is an independent check.
 * Every enumeration is capped by oracle_bound(): 2^20 elements unless the environment
 * variable ABELCODE_ORACLE_BOUND holds a positive integer.
 */

#include <stdexcept>
#include <string>
#include <vector>

#include "abelcode/codes.hpp"

namespace abelcode::oracle {

class BoundExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

Int oracle_bound();

/// Explicit element list of a subgroup of a sequence space, sorted lexicographically.
struct EnumeratedCode {
    SequenceSpace space;
    std::vector<Vector> elements;

    std::size_t size() const { return elements.size(); }
    bool contains(const Vector& v) const;
    bool operator==(const EnumeratedCode& o) const { return space == o.space && elements == o.elements; }
};

/// Breadth-first closure of the generators. Throws BoundExceeded past the bound.
EnumeratedCode enumerate_span(const SequenceSpace& space, const std::vector<Vector>& generators, Int bound = 0);
EnumeratedCode enumerate(const BlockCode& code, Int bound = 0);
EnumeratedCode enumerate_ambient(const SequenceSpace& space, Int bound = 0);

/// Whether the explicit list is exactly the element set of the code.
bool same_elements(const BlockCode& code, const EnumeratedCode& e);

/// Every subgroup of the sequence space, each with a small generating set.
std::vector<std::vector<Vector>> all_subgroups(const SequenceSpace& space, Int bound = 0);

/// C_k(L) by definition: c with some w in C, w = 0 on [0,k), w = c on [k+L, N).
EnumeratedCode reachable_set(const EnumeratedCode& code, std::size_t k, std::size_t window);
/// Sequences agreeing on [k, k+L] (clipped) with some codeword.
EnumeratedCode consistency_set(const EnumeratedCode& code, std::size_t k, std::size_t window);
EnumeratedCode controllable_subcode(const EnumeratedCode& code, std::size_t window);
EnumeratedCode observable_supercode(const EnumeratedCode& code, std::size_t window);

std::vector<std::size_t> control_lengths(const EnumeratedCode& code);
std::size_t control_index(const EnumeratedCode& code);
std::size_t observe_index(const EnumeratedCode& code);

/// Least n >= l with an order-bounded split of every codeword, for l = 0..N, by a triple loop.
std::vector<std::size_t> order_profile(const EnumeratedCode& code);

/// Characters (same coordinates as the space) pairing to zero with every element.
EnumeratedCode annihilator(const EnumeratedCode& code);

/// Invariant factors recovered from counts of elements killed by prime powers.
Vector invariant_factors(const EnumeratedCode& code);

struct Claim {
    Vector element;
    std::size_t begin = 0;
    std::size_t end = 0;
};

/// Exhaustive tuple check: every y_m lies in C with support in [begin,end), and
/// (a_m) -> sum a_m y_m is a bijection from prod Z/ord(y_m) onto C.
bool is_direct_decomposition(const EnumeratedCode& code, const std::vector<Claim>& claims);

/// Solution set on horizon n + extra of all fully contained shifted checks, restricted to [0, n).
EnumeratedCode kernel_window(const FiniteAbelianGroup& symbol, const std::vector<std::vector<Vector>>& checks,
                             std::size_t n, std::size_t extra);

}  // namespace abelcode::oracle
