#include <algorithm>
#include <map>

#include "logchern/errors.hpp"
#include "logchern/ideals.hpp"
#include "logchern/univariate.hpp"

namespace logchern {

namespace {

/// Exponent bound per variable from pure-power leading monomials; 0 means none.
std::vector<std::uint32_t> pure_power_bounds(const GroebnerBasis& g) {
    std::vector<std::uint32_t> bound(g.num_vars, 0);
    for (const Monomial& m : g.leading_monomials()) {
        const int v = m.pure_power_variable();
        if (v < 0) continue;
        auto& b = bound[static_cast<std::size_t>(v)];
        b = b == 0 ? m[static_cast<std::size_t>(v)] : std::min(b, m[static_cast<std::size_t>(v)]);
    }
    return bound;
}

void require_zero_dimensional(const GroebnerBasis& g, const char* who) {
    if (!is_zero_dimensional(g))
        throw NotZeroDimensional(std::string(who) + ": ideal is not zero-dimensional");
}

}  // namespace

bool is_zero_dimensional(const GroebnerBasis& g) {
    if (g.is_unit_ideal()) return true;
    const auto bound = pure_power_bounds(g);
    return std::all_of(bound.begin(), bound.end(), [](std::uint32_t b) { return b > 0; });
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& g) {
    require_zero_dimensional(g, "standard_monomials");
    if (g.is_unit_ideal()) return {};
    const auto bound = pure_power_bounds(g);
    const auto leads = g.leading_monomials();
    std::vector<Monomial> out;
    Monomial m(g.num_vars);
    // Odometer over the box [0, bound_i).
    for (;;) {
        const bool standard = std::none_of(leads.begin(), leads.end(),
                                           [&m](const Monomial& l) { return l.divides(m); });
        if (standard) out.push_back(m);
        std::size_t i = 0;
        while (i < g.num_vars) {
            if (++m[i] < bound[i]) break;
            m[i] = 0;
            ++i;
        }
        if (i == g.num_vars) break;
    }
    std::sort(out.begin(), out.end(), [&g](const Monomial& a, const Monomial& b) {
        return order_greater(g.order, b, a);
    });
    return out;
}

std::size_t quotient_dimension(const GroebnerBasis& g) {
    return standard_monomials(g).size();
}

RatMatrix multiplication_matrix(const GroebnerBasis& g, const MultiPoly& f) {
    const auto basis = standard_monomials(g);
    const std::size_t n = basis.size();
    std::map<Monomial, std::size_t, OrderDescending> index(OrderDescending{g.order});
    for (std::size_t k = 0; k < n; ++k) index.emplace(basis[k], k);

    const MultiPoly reduced_f = normal_form(f, g);
    RatMatrix m(n, std::vector<Rat>(n));
    for (std::size_t j = 0; j < n; ++j) {
        const MultiPoly image = normal_form(reduced_f.mul_term(Rat(1), basis[j]), g);
        for (const auto& [mono, c] : image.terms()) m[index.at(mono)][j] = c;
    }
    return m;
}

std::size_t quotient_dimension_on_zero_set(const GroebnerBasis& g, const MultiPoly& f) {
    require_zero_dimensional(g, "quotient_dimension_on_zero_set");
    const RatMatrix m = multiplication_matrix(g, f);
    const std::size_t n = m.size();
    if (n == 0) return 0;
    // rank(M^k) decreases strictly until it stabilizes, which happens by k = n.
    RatMatrix power = m;
    std::size_t current = rank(power);
    for (std::size_t k = 1; k <= n; ++k) {
        RatMatrix next = matrix_product(power, m);
        const std::size_t r = rank(next);
        if (r == current) break;
        current = r;
        power = std::move(next);
    }
    return n - current;
}

univariate::Poly minimal_polynomial(const GroebnerBasis& g, const MultiPoly& f) {
    const auto basis = standard_monomials(g);
    const std::size_t n = basis.size();
    if (n == 0) return {Rat(1)};
    std::map<Monomial, std::size_t, OrderDescending> index(OrderDescending{g.order});
    for (std::size_t k = 0; k < n; ++k) index.emplace(basis[k], k);

    // Krylov sequence 1, f, f^2, ... in the quotient. Each echelon row keeps
    // the combination of powers it came from, so the first vanishing
    // reduction is the minimal relation.
    struct Row {
        std::vector<Rat> vec;
        std::vector<Rat> combo;
        std::size_t pivot;
    };
    std::vector<Row> rows;
    const MultiPoly reduced_f = normal_form(f, g);
    MultiPoly power = normal_form(MultiPoly::constant(g.num_vars, Rat(1)), g);
    for (std::size_t k = 0; k <= n; ++k) {
        Row r{std::vector<Rat>(n), std::vector<Rat>(k + 1), 0};
        for (const auto& [mono, c] : power.terms()) r.vec[index.at(mono)] = c;
        r.combo[k] = Rat(1);
        for (const Row& e : rows) {
            const Rat c = r.vec[e.pivot];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!e.vec[j].is_zero()) r.vec[j] -= c * e.vec[j];
            for (std::size_t j = 0; j < e.combo.size(); ++j) r.combo[j] -= c * e.combo[j];
        }
        const auto nz = std::find_if(r.vec.begin(), r.vec.end(), [](const Rat& v) { return !v.is_zero(); });
        if (nz == r.vec.end()) {
            univariate::trim(r.combo);
            return r.combo;
        }
        r.pivot = static_cast<std::size_t>(nz - r.vec.begin());
        const Rat inv = Rat(1) / r.vec[r.pivot];
        for (auto& v : r.vec) v *= inv;
        for (auto& v : r.combo) v *= inv;
        for (Row& e : rows) {
            const Rat c = e.vec[r.pivot];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) e.vec[j] -= c * r.vec[j];
            for (std::size_t j = 0; j < r.combo.size(); ++j) {
                if (j >= e.combo.size()) e.combo.resize(j + 1);
                e.combo[j] -= c * r.combo[j];
            }
        }
        rows.push_back(std::move(r));
        power = normal_form(power * reduced_f, g);
    }
    throw std::logic_error("minimal_polynomial: no relation within the quotient dimension");
}

RationalPoints rational_points(const GroebnerBasis& g) {
    if (g.num_vars != 2) throw DimensionMismatch("rational_points expects an ideal in two variables");
    require_zero_dimensional(g, "rational_points");
    RationalPoints out;
    out.complete = true;
    if (g.is_unit_ideal()) return out;

    // The roots of the minimal polynomial of y on Q[x,y]/I are the
    // y-coordinates of V(I); fibres are handled the same way after adding y - y0.
    const auto elim = minimal_polynomial(g, MultiPoly::variable(2, 1));
    const auto ys = univariate::rational_roots(elim);
    if (!ys.exhaustive ||
        univariate::degree(univariate::squarefree_part(elim)) != static_cast<int>(ys.roots.size()))
        out.complete = false;

    for (const Rat& y0 : ys.roots) {
        std::vector<MultiPoly> gens = g.basis;
        gens.push_back(MultiPoly::variable(2, 1) - MultiPoly::constant(2, y0));
        const GroebnerBasis fibre_basis = groebner_basis(IdealData(std::move(gens)), g.order);
        const auto fibre = minimal_polynomial(fibre_basis, MultiPoly::variable(2, 0));
        const auto xs = univariate::rational_roots(fibre);
        if (!xs.exhaustive ||
            univariate::degree(univariate::squarefree_part(fibre)) != static_cast<int>(xs.roots.size()))
            out.complete = false;
        for (const Rat& x0 : xs.roots) out.points.push_back(AffinePoint{{x0, y0}});
    }
    std::sort(out.points.begin(), out.points.end());
    return out;
}

}  // namespace logchern
