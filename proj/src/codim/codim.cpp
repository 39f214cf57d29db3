#include "logchern/codim.hpp"

#include <stdexcept>

#include "logchern/errors.hpp"

namespace logchern {

namespace {

Rat degree_of(unsigned d) { return Rat(static_cast<long>(d)); }

}  // namespace

void validate(const CIData& y) {
    if (y.ambient_dim < 1) throw std::invalid_argument("ambient dimension must be at least 1");
    if (y.degrees.empty() || y.codim() > y.ambient_dim)
        throw std::invalid_argument("codimension must satisfy 1 <= c <= n");
    for (unsigned d : y.degrees)
        if (d < 1) throw std::invalid_argument("hypersurface degrees must be positive");
}

CIClasses ci_fundamental_and_normal(const CIData& y) {
    validate(y);
    const std::size_t n = y.ambient_dim;
    Rat product(1);
    ChowClass normal = ChowClass::unit(n);
    ChowClass normal_dual = ChowClass::unit(n);
    for (unsigned d : y.degrees) {
        product *= degree_of(d);
        normal = normal * line_bundle_chern(DivisorClass{degree_of(d)}, n);
        normal_dual = normal_dual * line_bundle_chern(DivisorClass{-degree_of(d)}, n);
    }
    return {ChowClass::monomial(n, y.codim(), product), normal, normal_dual};
}

ChowClass ci_segre(const CIData& y) {
    const CIClasses c = ci_fundamental_and_normal(y);
    return class_inverse(c.normal) * c.fundamental;
}

ChowClass rr_structure_sheaf(const CIData& y) {
    const std::size_t codim = y.codim();
    if (codim != 2 && codim != 3)
        throw UnsupportedCodimension("no Riemann-Roch closed form for codimension " + std::to_string(codim));
    const CIClasses c = ci_fundamental_and_normal(y);
    const std::size_t n = y.ambient_dim;
    const ChowClass x = ChowClass::unit(n);
    const ChowClass inv_dual = class_inverse(c.normal_dual);
    if (codim == 2) return x - inv_dual * c.fundamental;

    const ChowClass c1 = ChowClass::monomial(n, 1, c.normal[1]);
    const ChowClass two = ChowClass::monomial(n, 0, Rat(2));
    return x + inv_dual * (two - c1) * class_inverse(x - c1) * c.fundamental;
}

IdentityCheck identity_check(const CIData& y) {
    const std::size_t codim = y.codim();
    if (codim > 3)
        throw UnsupportedCodimension("identity check supports codimension 1 to 3, got " + std::to_string(codim));
    validate(y);
    const std::size_t n = y.ambient_dim;

    IdentityCheck out{ChowClass(n), ChowClass(n), false, ChowClass(n)};
    out.lhs = ChowClass::unit(n) - dual(ci_segre(y));
    if (codim == 1) {
        out.rhs = class_inverse(line_bundle_chern(DivisorClass{-degree_of(y.degrees.front())}, n));
    } else {
        out.rhs = rr_structure_sheaf(y);
    }
    out.mismatch = out.rhs - out.lhs;
    out.holds = out.mismatch.is_zero();
    return out;
}

}  // namespace logchern
