#pragma once

/**
 * @file ideals.hpp
 * @brief Groebner bases over Q and the zero-dimensional toolkit built on them:
 *        normal forms, standard monomials, quotient dimensions and rational
 *        points of the variety.
 */

#include <cstddef>
#include <vector>

#include "logchern/monomial.hpp"
#include "logchern/multipoly.hpp"
#include "logchern/rat.hpp"

namespace logchern {

/// A finitely generated ideal. Zero generators are dropped on construction;
/// an ideal given only zeros is rejected.
class IdealData {
public:
    explicit IdealData(std::vector<MultiPoly> generators);

    std::size_t num_vars() const { return gens_.front().num_vars(); }
    const std::vector<MultiPoly>& generators() const { return gens_; }

private:
    std::vector<MultiPoly> gens_;
};

/// Reduced Groebner basis: monic elements, sorted by ascending leading
/// monomial, no leading monomial dividing any term of another element.
struct GroebnerBasis {
    MonomialOrder order = MonomialOrder::Grevlex;
    std::size_t num_vars = 0;
    std::vector<MultiPoly> basis;
    bool is_reduced = true;

    std::vector<Monomial> leading_monomials() const;
    bool is_unit_ideal() const;
};

struct AffinePoint {
    std::vector<Rat> coords;
    friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
    friend auto operator<=>(const AffinePoint&, const AffinePoint&) = default;
};

/// Buchberger's algorithm with Gebauer-Moeller pair pruning. Pairs are taken
/// lowest lcm degree first, ties broken by the order on the lcm and then by
/// creation index, so the output is deterministic; being reduced and sorted
/// it is also independent of generator order.
GroebnerBasis groebner_basis(const IdealData& ideal, MonomialOrder order = MonomialOrder::Grevlex);

/// Full remainder of p modulo G. Zero iff p lies in the ideal.
MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& g);

bool is_zero_dimensional(const GroebnerBasis& g);

/// Monomials not divisible by any leading monomial, ascending in G's order.
/// Throws NotZeroDimensional.
std::vector<Monomial> standard_monomials(const GroebnerBasis& g);

/// dim_Q of the quotient algebra. Throws NotZeroDimensional.
std::size_t quotient_dimension(const GroebnerBasis& g);

/// Dimension of the part of Q[x]/I supported on V(f): the generalized
/// kernel of multiplication by f on the (finite-dimensional) quotient.
/// Equals the sum of local lengths of I at the points of V(I) where f vanishes.
std::size_t quotient_dimension_on_zero_set(const GroebnerBasis& g, const MultiPoly& f);

/// Square matrix of multiplication by f in the standard-monomial basis;
/// column j holds the coordinates of normal_form(f * b_j).
RatMatrix multiplication_matrix(const GroebnerBasis& g, const MultiPoly& f);

struct RationalPoints {
    std::vector<AffinePoint> points;  ///< sorted, distinct
    bool complete = false;            ///< every point of V(I) is rational
};

/// Monic minimal polynomial of multiplication by f on Q[x]/I, lowest degree
/// first. Its roots are the values of f on V(I). Throws NotZeroDimensional.
std::vector<Rat> minimal_polynomial(const GroebnerBasis& g, const MultiPoly& f);

/// Points of V(I) with rational coordinates for an ideal in two variables:
/// rational roots of the minimal polynomial of y, then of x on each fibre
/// I + (y - y0). Throws NotZeroDimensional or DimensionMismatch.
RationalPoints rational_points(const GroebnerBasis& g);

}  // namespace logchern
