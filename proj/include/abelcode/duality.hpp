#pragma once

/**
 * @file duality.hpp
 * @brief Characters of finite abelian groups, annihilators and dual codes.
 *
 * The circle group is modelled additively by Q/Z, so a character is trivial on g exactly
 * when the pairing is 0. The dual of Z/m_0 + ... + Z/m_{n-1} is identified with the same
 * group through <x, chi> = sum_j x_j chi_j / m_j (mod 1).
 */

#include <string>

#include "abelcode/codes.hpp"
#include "abelcode/groups.hpp"

namespace abelcode {

/// Exact element of Q/Z: numerator/denominator in lowest terms, 0 <= numerator < denominator.
class QmodZ {
public:
    QmodZ() = default;
    QmodZ(Int numerator, Int denominator);

    Int numerator() const { return num_; }
    Int denominator() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    QmodZ operator+(const QmodZ& o) const;
    QmodZ operator-() const;
    bool operator==(const QmodZ&) const = default;
    std::string to_string() const;

private:
    Int num_ = 0;
    Int den_ = 1;
};

/// Throws std::invalid_argument if x or chi do not conform to the group.
QmodZ pairing(const FiniteAbelianGroup& group, std::span<const Int> x, std::span<const Int> chi);

/// H^perp inside the dual group (identified with the ambient of H).
Subgroup annihilator(const Subgroup& h);

struct QuotientDualityReport {
    Vector quotient_invariants;             ///< R/S
    Vector annihilator_quotient_invariants; ///< S^perp / R^perp
    bool consistent = false;
};

/// Compares R/S with S^perp/R^perp. Throws std::invalid_argument unless S <= R.
QuotientDualityReport quotient_duality_check(const Subgroup& s, const Subgroup& r);

/// C^perp inside the coordinatewise dual space (same moduli).
BlockCode dual_block_code(const BlockCode& code);

}  // namespace abelcode
