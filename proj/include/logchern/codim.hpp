#pragma once

/**
 * @file codim.hpp
 * @brief The identity [X] - s(Y,X)^dual = c(O_Y) cap [X] for complete
 *        intersections Y of hypersurfaces in P^n, modelled by their degrees.
 *
 * For Y cut out by hypersurfaces of degrees d_1..d_c the normal bundle is
 * N = O(d_1) + ... + O(d_c), so every class involved depends only on the
 * degrees. Closed forms for c(O_Y) cap [X] are known in codimension 2 and 3.
 */

#include <cstddef>
#include <vector>

#include "logchern/chow.hpp"

namespace logchern {

struct CIData {
    std::size_t ambient_dim = 0;
    std::vector<unsigned> degrees;  ///< d_1..d_c

    std::size_t codim() const { return degrees.size(); }
};

/// Throws std::invalid_argument unless 1 <= c <= n and every d_i >= 1.
void validate(const CIData& y);

struct CIClasses {
    ChowClass fundamental;  ///< [Y] = (prod d_i) H^c
    ChowClass normal;       ///< c(N) = prod (1 + d_i H)
    ChowClass normal_dual;  ///< c(N^dual) = prod (1 - d_i H)
};

CIClasses ci_fundamental_and_normal(const CIData& y);

/// s(Y, X) = c(N)^{-1} cap [Y].
ChowClass ci_segre(const CIData& y);

/// Riemann-Roch closed forms for c(O_Y) cap [X]:
///   c = 2: [X] - c(N^dual)^{-1} [Y]
///   c = 3: [X] + c(N^dual)^{-1} (2 - c_1(N)) (1 - c_1(N))^{-1} [Y]
/// Throws UnsupportedCodimension for any other c.
ChowClass rr_structure_sheaf(const CIData& y);

struct IdentityCheck {
    ChowClass lhs;       ///< [X] - s(Y,X)^dual
    ChowClass rhs;       ///< c(O_Y) cap [X]
    bool holds = false;
    ChowClass mismatch;  ///< rhs - lhs
};

/// c = 1 uses c(O_D) = 1 / c(O(-D)); c = 2, 3 use rr_structure_sheaf.
/// Throws UnsupportedCodimension for c >= 4.
IdentityCheck identity_check(const CIData& y);

}  // namespace logchern
