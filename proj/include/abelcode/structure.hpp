#pragma once

/**
 * @file structure.hpp
 * @brief Rectangular and weakly rectangular decompositions of block codes.
 *
 * A Decomposition lists codewords y_m with support windows F_m such that C is the internal
 * direct sum of the cyclic groups <y_m>. Over a finite horizon the direct sum and the direct
 * product of the factors coincide, so the direct-sum statement for codes inside
 * finitely supported sequences is the same check.
 */

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "abelcode/codes.hpp"

namespace abelcode {

struct DecompositionGenerator {
    Vector element;
    std::size_t begin = 0;  ///< support window F_m = [begin, end)
    std::size_t end = 0;
    Int order = 1;
    Int prime = 0;          ///< p with order a power of p; 0 for generators not grouped by prime
};

struct Decomposition {
    std::vector<DecompositionGenerator> generators;
};

struct CertificateEntry {
    std::string condition;
    bool holds = false;
    std::string detail;
};

struct Certificate {
    bool valid = false;
    std::vector<CertificateEntry> entries;
    /// First failing condition, empty when valid.
    std::string first_failure;
};

/// Checks membership, declared supports, internal directness via the chain
/// <y_1..y_j> intersected with <y_{j+1}> = 0, and prod ord(y_m) = |C|.
Certificate verify_decomposition(const BlockCode& code, const Decomposition& decomposition);

/// Finite-horizon subdirect-product test: the factors are independent and sum to C.
bool is_subdirect_product(const BlockCode& code, const Decomposition& decomposition);

struct RectangularDecomposition {
    /// H_i = projection of C onto time i, as a subgroup of the symbol group G_i.
    std::vector<Subgroup> factors;
    /// Cyclic generators of the H_i, zero-padded, each supported on [i, i+1).
    Decomposition decomposition;
};

/// If the symbol-group orders are pairwise coprime, returns C = prod H_i with a certified
/// decomposition; otherwise nullopt (the hypothesis fails). Throws std::logic_error if the
/// hypothesis holds and the product check fails.
std::optional<RectangularDecomposition> coprime_rectangular(const BlockCode& code);

class DecompositionFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Splits C into p-primary components, then greedily extracts generators: at every step the
/// candidate with the shortest prefix window among elements whose order equals the exponent
/// of the remaining quotient and meets the chosen span trivially (ties broken by the
/// lexicographically least vector). The result is certified with verify_decomposition;
/// throws DecompositionFailure if no certified decomposition is produced.
Decomposition cyclic_product_decomposition(const BlockCode& code, Int enumeration_bound = Int{1} << 20);

/// Multiset of generator orders regrouped into invariant factors.
Vector decomposition_invariants(const Decomposition& decomposition);

}  // namespace abelcode
