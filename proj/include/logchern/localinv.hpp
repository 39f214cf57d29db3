#pragma once

/**
 * @file localinv.hpp
 * @brief Singularity invariants of reduced plane curves.
 *
 * A projective curve F(x, y, z) = 0 is validated and moved by an integer
 * unimodular change of coordinates until every singular point lies in the
 * affine chart z = 1. There, Milnor and Tjurina numbers are computed per
 * rational point from truncated jet algebras, and as global totals from
 * Groebner bases.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "logchern/ideals.hpp"
#include "logchern/matrix.hpp"
#include "logchern/multipoly.hpp"

namespace logchern {

struct DivisorInput {
    MultiPoly equation;          ///< F as given, homogeneous in x, y, z
    unsigned degree = 0;
    RatMatrix chart_transform;   ///< M with chart_equation(v) = F(M v)
    MultiPoly chart_equation;    ///< F after the change of coordinates

    friend bool operator==(const DivisorInput&, const DivisorInput&) = default;
};

struct ChartOptions {
    std::uint64_t seed = 0;
    unsigned retries = 32;  ///< total attempts; the first uses the identity
};

/// Rejects non-homogeneous, constant and non-reduced input (the projective
/// singular scheme must be finite), then searches for a chart: identity
/// first, then seeded random unimodular integer matrices, until no singular
/// point lies on z = 0 and the affine gradient ideal is zero-dimensional.
/// Throws ValidationError.
DivisorInput validate_divisor(const MultiPoly& f, const ChartOptions& options = {});

/// 2 (d-1)^2 + 4.
unsigned default_jet_order_cap(unsigned degree);

/// dim_Q of the local algebra of the ideal (gens) at `point`, computed as the
/// stable value of dim Q[x]/((gens) + m^N) over increasing N after moving the
/// point to the origin. Throws StabilizationError if dim(N) != dim(N+1) for
/// every N < max_order.
std::size_t local_algebra_dim(const std::vector<MultiPoly>& gens, const AffinePoint& point,
                              unsigned max_order);

struct MilnorTjurina {
    std::size_t mu = 0;
    std::size_t tau = 0;
};

/// mu from (f_x, f_y), tau from (f, f_x, f_y). Throws std::invalid_argument
/// if `point` is not a singular point of f.
MilnorTjurina milnor_tjurina_at(const MultiPoly& f, const AffinePoint& point, unsigned max_order);

struct SingularPointData {
    AffinePoint point;  ///< in the chart z = 1 of chart_equation
    std::size_t mu = 0;
    std::size_t tau = 0;
    bool quasi_homogeneous = false;  ///< mu == tau

    friend bool operator==(const SingularPointData&, const SingularPointData&) = default;
};

struct SingularLocusReport {
    std::vector<SingularPointData> points;  ///< rational points only, sorted
    std::size_t mu_total = 0;
    std::size_t tau_total = 0;
    bool all_points_rational = true;

    friend bool operator==(const SingularLocusReport&, const SingularLocusReport&) = default;
};

/// Totals: tau_total = dim Q[x,y]/(f, f_x, f_y); mu_total = the part of
/// Q[x,y]/(f_x, f_y) supported on f = 0, i.e. the Milnor algebra at the
/// singular points of the curve. Critical points of f off the curve are
/// excluded.
SingularLocusReport analyze_singular_locus(const DivisorInput& divisor,
                                           std::optional<unsigned> max_jet_order = std::nullopt);

}  // namespace logchern
