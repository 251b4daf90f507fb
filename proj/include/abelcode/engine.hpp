#pragma once

/**
 * @file engine.hpp
 * @brief Exact linear algebra over residue rings.
 *
 * A ResidueMatrix describes the subgroup of Z/m_0 + ... + Z/m_{n-1} spanned by its rows.
 * Mixed moduli are handled by embedding column j into Z/L (L = lcm of all m_j) through
 * multiplication by L/m_j; every canonical-form computation runs over that single ring and
 * maps back at the end.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace abelcode {

using Int = std::int64_t;
using Vector = std::vector<Int>;

Int gcd(Int a, Int b);
Int lcm(Int a, Int b);
Int lcm_of(std::span<const Int> values);
Int mod(Int a, Int m);
Int mul_mod(Int a, Int b, Int m);
bool is_prime(Int n);
/// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<Int, int>> factorize(Int n);
/// Exponent of p in n (n > 0).
int valuation(Int n, Int p);
Int checked_mul(Int a, Int b);

class ResidueMatrix {
public:
    ResidueMatrix() = default;
    explicit ResidueMatrix(Vector moduli);
    /// Rows must conform to the moduli: same length and 0 <= entry < modulus.
    ResidueMatrix(Vector moduli, std::vector<Vector> rows);

    /// Builds a matrix from arbitrary integers, reducing every entry into range.
    static ResidueMatrix reduced(Vector moduli, std::vector<Vector> rows);

    const Vector& moduli() const { return moduli_; }
    const std::vector<Vector>& rows() const { return rows_; }
    std::size_t cols() const { return moduli_.size(); }
    std::size_t row_count() const { return rows_.size(); }
    bool empty() const { return rows_.empty(); }
    /// lcm of the column moduli (1 for zero columns).
    Int exponent() const;

    bool operator==(const ResidueMatrix&) const = default;

private:
    Vector moduli_;
    std::vector<Vector> rows_;
};

/// Canonical Howell form of the row span: echelon by pivot column, pivots normalized to
/// divisors of their modulus, entries above each pivot reduced, and the Howell property
/// (every span element vanishing on the first k columns lies in the span of the rows with
/// pivot >= k). Two generator sets span the same subgroup iff their Howell forms coincide.
ResidueMatrix howell_form(const ResidueMatrix& m);

/// Pivot column of each row of a Howell-form matrix.
std::vector<std::size_t> pivot_columns(const ResidueMatrix& howell);

/// Additive order of each Howell row; the span has exactly prod(orders) elements and every
/// element is uniquely sum a_i * row_i with 0 <= a_i < order_i.
Vector pivot_orders(const ResidueMatrix& howell);

/// Echelon reduction of v against a Howell-form matrix. Returns the coefficients a_i
/// (0 <= a_i < order_i) with v = sum a_i * row_i, or nullopt when v is outside the span.
std::optional<Vector> howell_coordinates(const ResidueMatrix& howell, std::span<const Int> v);

bool howell_contains(const ResidueMatrix& howell, std::span<const Int> v);

/// Invariant factors d_1 | d_2 | ... (each >= 2) of the subgroup spanned by the rows.
Vector smith_invariants(const ResidueMatrix& m);

/// Smith normal form diagonal of an integer matrix (non-negative, divisibility chain,
/// length min(rows, cols), zeros last).
Vector smith_diagonal(const std::vector<Vector>& integer_matrix);

/// Invariant factors (>= 2) of Z^c / rowspan(relations) + D*Z^c, computed over Z/D.
Vector cokernel_invariants_mod(const std::vector<Vector>& relations, std::size_t cols, Int modulus);

/// Invariant factors of the quotient span(larger) / span(smaller). Throws
/// std::invalid_argument if the smaller span is not contained in the larger one.
Vector quotient_invariants(const ResidueMatrix& larger, const ResidueMatrix& smaller);

/// Turns a multiset of cyclic orders into invariant factors (ascending divisibility chain).
Vector invariant_factors_from_cyclic_orders(std::span<const Int> orders);

struct CongruenceSolution {
    /// Row coefficients x (residues mod the exponent L of the system) with sum x_i A_i = b.
    Vector particular;
    /// Howell basis of all homogeneous solutions inside (Z/L)^rows.
    ResidueMatrix kernel;
};

/// Solves sum_i x_i * A_i = b for x in (Z/L)^{rows(A)}, where L is the exponent of A's
/// moduli. Returns nullopt when the system is unsolvable; throws std::invalid_argument on a
/// dimension mismatch or an out-of-range right-hand side.
std::optional<CongruenceSolution> solve_congruence_system(const ResidueMatrix& a, std::span<const Int> b);

std::string format_vector(std::span<const Int> v);

}  // namespace abelcode
