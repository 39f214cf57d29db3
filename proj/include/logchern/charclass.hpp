#pragma once

/**
 * @file charclass.hpp
 * @brief Characteristic classes of a plane curve D and its complement U in P^2.
 *
 * Two independent pipelines meet here:
 *  - the Chern-Schwartz-MacPherson side, built from the Segre classes of D
 *    and of its Jacobian scheme (dual and twist operations in chow.hpp);
 *  - the logarithmic-derivation side, built from the exact sequence
 *    0 -> Der(-log D) -> Der -> O_D(D) -> O_{J_D}(D) -> 0 and the structure
 *    sheaf class c(O_{J_D}) = prod_P ([X] - [P])^{tau(P)}.
 * verify_theorem evaluates both and cross-checks every equivalent verdict.
 */

#include <cstddef>
#include <optional>

#include "logchern/chow.hpp"
#include "logchern/localinv.hpp"

namespace logchern {

/// c(T X) . ( s(D,X) + c(O(D))^{-1} . (s(J_D,X)^dual (x)_X D) ) in P^n, for a
/// hypersurface of degree d whose Jacobian scheme has Segre class `segre_jacobian`.
ChowClass csm_hypersurface(unsigned degree, const ChowClass& segre_jacobian);

/// Plane-curve form: s(J_D, P^2) = mu_total [point].
ChowClass csm_hypersurface(unsigned degree, std::size_t mu_total);

/// c_SM(1_U) = c(T P^2) - c_SM(1_D).
ChowClass csm_complement(unsigned degree, std::size_t mu_total);

/// c(O_{J_D}) cap [P^2] for a zero-dimensional Jacobian scheme of total
/// length tau_total: product of (1 - H^2) over points with multiplicity.
ChowClass jacobian_structure_sheaf_chern(std::size_t tau_total);

/// c(Der_X(-log D)) cap [X] = c(T X) . (c(O_{J_D}) cap [X] (x)_X D) / c(O(D)).
ChowClass chern_log_derivations(unsigned degree, std::size_t tau_total);

struct SegreChernIdentity {
    ChowClass lhs;  ///< [X] - s(J_D, X)^dual
    ChowClass rhs;  ///< c(O_{J_D}) cap [X]
    bool holds = false;
};

SegreChernIdentity segre_chern_identity(std::size_t mu_total, std::size_t tau_total);

struct CurveReport {
    DivisorInput divisor;
    SingularLocusReport locus;
    ChowClass csm_curve{2};
    ChowClass csm_complement{2};
    ChowClass chern_logder{2};
    ChowClass segre_side{2};
    ChowClass chern_side{2};
    bool formula_holds = false;
    bool identity_holds = false;
    ChowClass difference{2};  ///< csm_complement - chern_logder
    long euler_curve = 0;
    long euler_complement = 0;
    /// Every rational singular point has mu == tau; set only when all points are rational.
    std::optional<bool> pointwise_quasi_homogeneous;

    friend bool operator==(const CurveReport&, const CurveReport&) = default;
};

struct VerifyOptions {
    std::optional<unsigned> max_jet_order;
};

/// Runs the full verification on a validated divisor. Throws std::logic_error
/// if any internal cross-check fails (additivity, integrality, verdict
/// agreement), and propagates localinv errors.
CurveReport verify_theorem(const DivisorInput& divisor, const VerifyOptions& options = {});

}  // namespace logchern
