#include <map>

#include "logchern/errors.hpp"
#include "logchern/localinv.hpp"

namespace logchern {

namespace {

/// Monomials of total degree < bound, ascending degree. Low-degree columns
/// come first so pivots act like a local order and rows stay sparse.
std::vector<Monomial> monomials_below(std::size_t num_vars, unsigned bound) {
    std::vector<Monomial> out;
    std::vector<Monomial> layer{Monomial(num_vars)};
    for (unsigned d = 0; d < bound; ++d) {
        out.insert(out.end(), layer.begin(), layer.end());
        std::vector<Monomial> next;
        for (const auto& m : layer) {
            // Raise only variables at or after the last nonzero one: each
            // monomial of degree d+1 is produced exactly once.
            std::size_t last = 0;
            for (std::size_t i = 0; i < num_vars; ++i)
                if (m[i] != 0) last = i;
            for (std::size_t i = last; i < num_vars; ++i) {
                Monomial r = m;
                r[i] += 1;
                next.push_back(r);
            }
        }
        layer = std::move(next);
    }
    return out;
}

using SparseRow = std::map<std::size_t, Rat>;

class Echelon {
public:
    explicit Echelon(std::size_t cols) : pivots_(cols) {}

    void insert(SparseRow row) {
        while (!row.empty()) {
            const auto [col, lead] = *row.begin();
            auto& pivot = pivots_[col];
            if (pivot.empty()) {
                for (auto& [c, v] : row) v /= lead;
                pivot = std::move(row);
                ++rank_;
                return;
            }
            for (const auto& [c, v] : pivot) {
                auto [it, inserted] = row.try_emplace(c, -lead * v);
                if (!inserted) {
                    it->second -= lead * v;
                    if (it->second.is_zero()) row.erase(it);
                }
            }
        }
    }

    std::size_t rank() const { return rank_; }

private:
    std::vector<SparseRow> pivots_;
    std::size_t rank_ = 0;
};

/// dim Q[x]/((gens) + m^bound) for gens already centred at the origin.
std::size_t truncated_dim(const std::vector<MultiPoly>& gens, std::size_t num_vars, unsigned bound) {
    const auto monos = monomials_below(num_vars, bound);
    std::map<Monomial, std::size_t, OrderDescending> column(OrderDescending{MonomialOrder::Grevlex});
    for (std::size_t k = 0; k < monos.size(); ++k) column.emplace(monos[k], k);

    Echelon echelon(monos.size());
    for (const auto& g : gens) {
        const MultiPoly jet = g.truncated_below(bound);
        if (jet.is_zero()) continue;
        const unsigned order = jet.terms().rbegin()->first.degree();  // lowest degree present
        for (const auto& m : monos) {
            if (m.degree() + order >= bound) continue;
            SparseRow row;
            for (const auto& [t, c] : jet.terms()) {
                const Monomial prod = t * m;
                if (prod.degree() < bound) row.emplace(column.at(prod), c);
            }
            echelon.insert(std::move(row));
        }
    }
    return monos.size() - echelon.rank();
}

}  // namespace

std::size_t local_algebra_dim(const std::vector<MultiPoly>& gens, const AffinePoint& point,
                              unsigned max_order) {
    if (gens.empty()) throw std::invalid_argument("local_algebra_dim needs generators");
    const std::size_t n = gens.front().num_vars();
    if (point.coords.size() != n) throw DimensionMismatch("point has wrong number of coordinates");

    std::vector<MultiPoly> centred;
    for (const auto& g : gens) {
        if (g.num_vars() != n) throw DimensionMismatch("generators have different variable counts");
        centred.push_back(shift(g, point.coords));
    }

    std::size_t previous = truncated_dim(centred, n, 1);
    for (unsigned order = 1; order < max_order; ++order) {
        const std::size_t current = truncated_dim(centred, n, order + 1);
        if (current == previous) {
            // Nakayama: m^order lies in the localized ideal, so every larger
            // truncation agrees. Checked once more as a guard.
            if (truncated_dim(centred, n, order + 2) != current)
                throw std::logic_error("jet dimension changed after stabilizing");
            return current;
        }
        if (current < previous) throw std::logic_error("jet dimension decreased");
        previous = current;
    }
    throw StabilizationError("local algebra dimension did not stabilize below jet order " +
                             std::to_string(max_order) +
                             " (point not isolated, or raise --max-jet-order)");
}

MilnorTjurina milnor_tjurina_at(const MultiPoly& f, const AffinePoint& point, unsigned max_order) {
    std::vector<MultiPoly> partials;
    for (std::size_t i = 0; i < f.num_vars(); ++i) partials.push_back(partial_derivative(f, i));

    if (!f.evaluate(point.coords).is_zero())
        throw std::invalid_argument("point does not lie on the curve");
    for (const auto& p : partials)
        if (!p.evaluate(point.coords).is_zero())
            throw std::invalid_argument("point is not a singular point of the curve");

    MilnorTjurina out;
    out.mu = local_algebra_dim(partials, point, max_order);
    std::vector<MultiPoly> with_f = partials;
    with_f.insert(with_f.begin(), f);
    out.tau = local_algebra_dim(with_f, point, max_order);
    return out;
}

}  // namespace logchern
