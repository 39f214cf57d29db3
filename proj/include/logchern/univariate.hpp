#pragma once

/**
 * @file univariate.hpp
 * @brief Dense univariate polynomials over Q, only what rational-root
 *        extraction needs. Coefficients are stored lowest degree first and
 *        trailing zeros are trimmed.
 */

#include <vector>

#include "logchern/rat.hpp"

namespace logchern::univariate {

using Poly = std::vector<Rat>;

void trim(Poly& p);
int degree(const Poly& p);
Poly derivative(const Poly& p);
Poly remainder(Poly a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);
/// p / gcd(p, p'), monic.
Poly squarefree_part(const Poly& p);
Rat evaluate(const Poly& p, const Rat& x);

struct RootSearch {
    std::vector<Rat> roots;  ///< distinct, ascending
    bool exhaustive = true;  ///< false if integer factoring gave up
};

/// Rational roots by the rational root theorem on the primitive integer
/// multiple of p. Requires p nonzero.
RootSearch rational_roots(const Poly& p);

}  // namespace logchern::univariate
