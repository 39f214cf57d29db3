#include "logchern/localinv.hpp"

namespace logchern {

SingularLocusReport analyze_singular_locus(const DivisorInput& divisor,
                                           std::optional<unsigned> max_jet_order) {
    const unsigned cap = max_jet_order.value_or(default_jet_order_cap(divisor.degree));
    const MultiPoly f = dehomogenize(divisor.chart_equation, 2);
    const MultiPoly fx = partial_derivative(f, 0);
    const MultiPoly fy = partial_derivative(f, 1);

    SingularLocusReport report;

    const GroebnerBasis tjurina = groebner_basis(IdealData({f, fx, fy}));
    report.tau_total = quotient_dimension(tjurina);

    const GroebnerBasis milnor = groebner_basis(IdealData({fx, fy}));
    report.mu_total = quotient_dimension_on_zero_set(milnor, f);

    const RationalPoints located = rational_points(tjurina);
    report.all_points_rational = located.complete;
    for (const auto& p : located.points) {
        const MilnorTjurina inv = milnor_tjurina_at(f, p, cap);
        if (!(inv.mu >= inv.tau && inv.tau >= 1))
            throw std::logic_error("singular point violates mu >= tau >= 1");
        report.points.push_back(SingularPointData{p, inv.mu, inv.tau, inv.mu == inv.tau});
    }

    if (report.all_points_rational) {
        std::size_t mu_sum = 0;
        std::size_t tau_sum = 0;
        for (const auto& p : report.points) {
            mu_sum += p.mu;
            tau_sum += p.tau;
        }
        if (mu_sum != report.mu_total || tau_sum != report.tau_total)
            throw std::logic_error("local invariants do not sum to the global totals");
    }
    return report;
}

}  // namespace logchern
