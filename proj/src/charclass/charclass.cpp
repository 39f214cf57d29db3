#include "logchern/charclass.hpp"

#include <stdexcept>

namespace logchern {

namespace {

constexpr std::size_t kPlane = 2;

Rat as_rat(std::size_t v) { return Rat(static_cast<unsigned long>(v)); }

long integral_coefficient(const ChowClass& c, std::size_t codim) {
    const Rat& r = c[codim];
    if (!r.is_integer() || !r.numerator().fits_slong_p())
        throw std::logic_error("Euler characteristic is not a machine integer");
    return r.numerator().get_si();
}

}  // namespace

ChowClass csm_hypersurface(unsigned degree, const ChowClass& segre_jacobian) {
    const std::size_t n = segre_jacobian.ambient_dim();
    const DivisorClass d{Rat(static_cast<long>(degree))};
    const ChowClass c_od_inverse = class_inverse(line_bundle_chern(d, n));
    const ChowClass twisted = tensor_by_divisor(dual(segre_jacobian), d);
    return tangent_chern(n) * (segre_of_divisor(degree, n) + c_od_inverse * twisted);
}

ChowClass csm_hypersurface(unsigned degree, std::size_t mu_total) {
    return csm_hypersurface(degree, ChowClass::monomial(kPlane, 2, as_rat(mu_total)));
}

ChowClass csm_complement(unsigned degree, std::size_t mu_total) {
    return tangent_chern(kPlane) - csm_hypersurface(degree, mu_total);
}

ChowClass jacobian_structure_sheaf_chern(std::size_t tau_total) {
    const ChowClass point_sheaf = ChowClass::unit(kPlane) - ChowClass::monomial(kPlane, 2);
    return class_pow(point_sheaf, static_cast<unsigned>(tau_total));
}

ChowClass chern_log_derivations(unsigned degree, std::size_t tau_total) {
    const DivisorClass d{Rat(static_cast<long>(degree))};
    // Twisting a rank-0 sheaf by D twists its Chern class cap [X].
    const ChowClass twisted = tensor_by_divisor(jacobian_structure_sheaf_chern(tau_total), d);
    return tangent_chern(kPlane) * twisted * class_inverse(line_bundle_chern(d, kPlane));
}

SegreChernIdentity segre_chern_identity(std::size_t mu_total, std::size_t tau_total) {
    SegreChernIdentity out{
        ChowClass::unit(kPlane) - dual(ChowClass::monomial(kPlane, 2, as_rat(mu_total))),
        jacobian_structure_sheaf_chern(tau_total),
        false,
    };
    out.holds = out.lhs == out.rhs;
    return out;
}

CurveReport verify_theorem(const DivisorInput& divisor, const VerifyOptions& options) {
    CurveReport r;
    r.divisor = divisor;
    r.locus = analyze_singular_locus(divisor, options.max_jet_order);

    const unsigned d = divisor.degree;
    r.csm_curve = csm_hypersurface(d, r.locus.mu_total);
    r.csm_complement = csm_complement(d, r.locus.mu_total);
    r.chern_logder = chern_log_derivations(d, r.locus.tau_total);
    const SegreChernIdentity identity = segre_chern_identity(r.locus.mu_total, r.locus.tau_total);
    r.segre_side = identity.lhs;
    r.chern_side = identity.rhs;
    r.identity_holds = identity.holds;
    r.difference = r.csm_complement - r.chern_logder;
    r.formula_holds = r.difference.is_zero();
    r.euler_curve = integral_coefficient(r.csm_curve, 2);
    r.euler_complement = integral_coefficient(r.csm_complement, 2);

    if (r.locus.all_points_rational) {
        bool all_equal = true;
        for (const auto& p : r.locus.points) all_equal = all_equal && p.quasi_homogeneous;
        r.pointwise_quasi_homogeneous = all_equal;
    }

    if (!(r.csm_curve + r.csm_complement == tangent_chern(kPlane)))
        throw std::logic_error("CSM classes of D and U do not add up to c(T P^2)");
    for (const ChowClass* c : {&r.csm_curve, &r.csm_complement, &r.chern_logder, &r.segre_side,
                               &r.chern_side, &r.difference}) {
        if (!c->is_integral()) throw std::logic_error("non-integral characteristic class");
    }
    const bool totals_equal = r.locus.mu_total == r.locus.tau_total;
    if (r.formula_holds != r.identity_holds || r.identity_holds != totals_equal)
        throw std::logic_error("formula, Segre-Chern identity and mu/tau totals disagree");
    if (r.pointwise_quasi_homogeneous && *r.pointwise_quasi_homogeneous != r.formula_holds)
        throw std::logic_error("pointwise mu == tau verdict disagrees with the formula");
    return r;
}

}  // namespace logchern
