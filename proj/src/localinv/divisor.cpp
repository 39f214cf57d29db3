#include <random>

#include "logchern/errors.hpp"
#include "logchern/localinv.hpp"

namespace logchern {

namespace {

std::vector<MultiPoly> gradient(const MultiPoly& f) {
    std::vector<MultiPoly> out;
    for (std::size_t i = 0; i < f.num_vars(); ++i) out.push_back(partial_derivative(f, i));
    return out;
}

std::vector<MultiPoly> nonzero(std::vector<MultiPoly> polys) {
    std::erase_if(polys, [](const MultiPoly& p) { return p.is_zero(); });
    return polys;
}

/// Krull dimension of a monomial ideal is at most 1 iff every pair of
/// variables supports some generator.
bool cone_dimension_at_most_one(const std::vector<Monomial>& leads, std::size_t num_vars) {
    for (std::size_t i = 0; i < num_vars; ++i) {
        for (std::size_t j = i + 1; j < num_vars; ++j) {
            bool supported = false;
            for (const auto& m : leads) {
                bool inside = true;
                for (std::size_t k = 0; k < num_vars && inside; ++k)
                    if (k != i && k != j && m[k] != 0) inside = false;
                if (inside) {
                    supported = true;
                    break;
                }
            }
            if (!supported) return false;
        }
    }
    return true;
}

bool chart_is_good(const MultiPoly& transformed) {
    const auto grad = gradient(transformed);

    // Singular points on z = 0 are the projective zeros of the gradient with z = 0.
    std::vector<MultiPoly> at_infinity;
    for (const auto& g : grad) {
        MultiPoly restricted(2);
        for (const auto& [m, c] : g.terms())
            if (m[2] == 0) restricted += MultiPoly::term(c, Monomial{m[0], m[1]});
        at_infinity.push_back(std::move(restricted));
    }
    at_infinity = nonzero(std::move(at_infinity));
    if (at_infinity.empty()) return false;
    if (!is_zero_dimensional(groebner_basis(IdealData(at_infinity)))) return false;

    const MultiPoly f = dehomogenize(transformed, 2);
    auto affine_grad = nonzero({partial_derivative(f, 0), partial_derivative(f, 1)});
    if (affine_grad.empty()) return false;
    return is_zero_dimensional(groebner_basis(IdealData(affine_grad)));
}

RatMatrix random_unimodular(std::mt19937_64& rng) {
    // Product of unitriangular factors: determinant 1 by construction.
    auto draw = [&rng]() { return Rat(static_cast<long>(rng() % 5) - 2); };
    RatMatrix lower = identity_matrix(3);
    RatMatrix upper = identity_matrix(3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            lower[i][j] = draw();
            upper[j][i] = draw();
        }
    }
    return matrix_product(lower, upper);
}

}  // namespace

DivisorInput validate_divisor(const MultiPoly& f, const ChartOptions& options) {
    using Kind = ValidationError::Kind;
    if (f.num_vars() != 3)
        throw ValidationError(Kind::Degenerate, "curve equation must use exactly the variables x, y, z");
    if (f.is_zero()) throw ValidationError(Kind::Degenerate, "zero polynomial does not define a curve");
    if (!f.is_homogeneous()) throw ValidationError(Kind::NotHomogeneous, "polynomial is not homogeneous");
    if (f.total_degree() < 1)
        throw ValidationError(Kind::Degenerate, "constant polynomial does not define a curve");
    if (options.retries < 1) throw std::invalid_argument("chart retry budget must be at least 1");

    // The projective singular scheme V(F_x, F_y, F_z) must be finite. A
    // non-reduced component makes it contain a curve, so this also certifies
    // that F is squarefree.
    const auto grad = nonzero(gradient(f));
    if (!grad.empty()) {
        const GroebnerBasis g = groebner_basis(IdealData(grad));
        if (!cone_dimension_at_most_one(g.leading_monomials(), 3))
            throw ValidationError(Kind::NonIsolated, "non-reduced or non-isolated singularities");
    }

    DivisorInput out;
    out.equation = f;
    out.degree = static_cast<unsigned>(f.total_degree());

    std::mt19937_64 rng(options.seed);
    for (unsigned attempt = 0; attempt < options.retries; ++attempt) {
        const RatMatrix m = attempt == 0 ? identity_matrix(3) : random_unimodular(rng);
        MultiPoly transformed = attempt == 0 ? f : substitute_linear(f, m);
        if (chart_is_good(transformed)) {
            out.chart_transform = m;
            out.chart_equation = std::move(transformed);
            return out;
        }
    }
    throw ValidationError(Kind::ChartRetriesExhausted,
                          "no coordinate chart containing all singular points found within " +
                              std::to_string(options.retries) + " attempts");
}

unsigned default_jet_order_cap(unsigned degree) {
    const unsigned d1 = degree == 0 ? 0 : degree - 1;
    return 2 * d1 * d1 + 4;
}

}  // namespace logchern
