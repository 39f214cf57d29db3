#include <algorithm>
#include <map>
#include <optional>
#include <tuple>

#include "logchern/errors.hpp"
#include "logchern/ideals.hpp"

namespace logchern {

namespace {

// Terms sorted by the active order; the first entry is the leading term.
using WorkPoly = TermMap;

WorkPoly to_work(const MultiPoly& p, MonomialOrder order) {
    WorkPoly w(OrderDescending{order});
    for (const auto& [m, c] : p.terms()) w.emplace(m, c);
    return w;
}

MultiPoly from_work(const WorkPoly& w, std::size_t num_vars) {
    std::vector<std::pair<Monomial, Rat>> terms(w.begin(), w.end());
    return MultiPoly::from_terms(num_vars, terms);
}

void make_monic(WorkPoly& p) {
    if (p.empty()) return;
    const Rat lc = p.begin()->second;
    if (lc.is_one()) return;
    for (auto& [m, c] : p) c /= lc;
}

void add_scaled(WorkPoly& acc, const WorkPoly& g, const Rat& factor, const Monomial& shift) {
    for (const auto& [m, c] : g) {
        auto [it, inserted] = acc.try_emplace(m * shift, c * factor);
        if (!inserted) {
            it->second += c * factor;
            if (it->second.is_zero()) acc.erase(it);
        }
    }
}

/// Full reduction of p by monic divisors.
WorkPoly reduce(WorkPoly p, const std::vector<const WorkPoly*>& divisors) {
    WorkPoly rem(p.key_comp());
    while (!p.empty()) {
        const auto lead = p.begin();
        const WorkPoly* hit = nullptr;
        for (const WorkPoly* g : divisors) {
            if (g->begin()->first.divides(lead->first)) {
                hit = g;
                break;
            }
        }
        if (hit == nullptr) {
            rem.emplace_hint(rem.end(), lead->first, lead->second);
            p.erase(lead);
            continue;
        }
        const Monomial shift = lead->first / hit->begin()->first;
        const Rat factor = -lead->second;
        add_scaled(p, *hit, factor, shift);
    }
    return rem;
}

struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
};

class Buchberger {
public:
    Buchberger(MonomialOrder order, std::size_t num_vars) : order_(order), n_(num_vars) {}

    void insert_generator(const MultiPoly& f) {
        WorkPoly h = reduce(to_work(f, order_), active_divisors());
        if (h.empty()) return;
        make_monic(h);
        add(std::move(h));
    }

    void run() {
        while (!pairs_.empty()) {
            const auto best = select_pair();
            const Pair pair = pairs_[best];
            pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));

            const WorkPoly& a = polys_[pair.i];
            const WorkPoly& b = polys_[pair.j];
            WorkPoly s(OrderDescending{order_});
            add_scaled(s, a, Rat(1), pair.lcm / a.begin()->first);
            add_scaled(s, b, Rat(-1), pair.lcm / b.begin()->first);
            WorkPoly h = reduce(std::move(s), active_divisors());
            if (h.empty()) continue;
            make_monic(h);
            add(std::move(h));
        }
    }

    GroebnerBasis finish() const {
        std::vector<std::size_t> idx;
        for (std::size_t k = 0; k < polys_.size(); ++k)
            if (active_[k]) idx.push_back(k);

        std::vector<WorkPoly> reduced;
        for (std::size_t k : idx) {
            std::vector<const WorkPoly*> others;
            for (std::size_t o : idx)
                if (o != k) others.push_back(&polys_[o]);
            WorkPoly r = reduce(polys_[k], others);
            make_monic(r);
            reduced.push_back(std::move(r));
        }
        std::sort(reduced.begin(), reduced.end(), [this](const WorkPoly& a, const WorkPoly& b) {
            return order_greater(order_, b.begin()->first, a.begin()->first);
        });

        GroebnerBasis out;
        out.order = order_;
        out.num_vars = n_;
        for (const auto& r : reduced) out.basis.push_back(from_work(r, n_));
        out.is_reduced = true;
        return out;
    }

    bool has_unit() const {
        for (std::size_t k = 0; k < polys_.size(); ++k)
            if (active_[k] && polys_[k].begin()->first.is_one()) return true;
        return false;
    }

private:
    const Monomial& lm(std::size_t k) const { return polys_[k].begin()->first; }

    std::vector<const WorkPoly*> active_divisors() const {
        std::vector<const WorkPoly*> out;
        for (std::size_t k = 0; k < polys_.size(); ++k)
            if (active_[k]) out.push_back(&polys_[k]);
        return out;
    }

    std::size_t select_pair() const {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs_.size(); ++k) {
            const Pair& p = pairs_[k];
            const Pair& q = pairs_[best];
            const auto dp = p.lcm.degree();
            const auto dq = q.lcm.degree();
            if (dp != dq) {
                if (dp < dq) best = k;
                continue;
            }
            if (!(p.lcm == q.lcm)) {
                if (order_greater(order_, q.lcm, p.lcm)) best = k;
                continue;
            }
            if (std::tie(p.i, p.j) < std::tie(q.i, q.j)) best = k;
        }
        return best;
    }

    // Gebauer-Moeller update for a new basis element h.
    void add(WorkPoly h) {
        const std::size_t hi = polys_.size();
        polys_.push_back(std::move(h));
        active_.push_back(false);
        const Monomial lh = lm(hi);

        std::vector<std::size_t> candidates;
        for (std::size_t k = 0; k < hi; ++k)
            if (active_[k]) candidates.push_back(k);

        std::vector<std::size_t> kept;
        std::vector<bool> done(candidates.size(), false);
        for (std::size_t a = 0; a < candidates.size(); ++a) {
            done[a] = true;
            const std::size_t g1 = candidates[a];
            const Monomial l1 = lcm(lh, lm(g1));
            bool keep = coprime(lh, lm(g1));
            if (!keep) {
                keep = true;
                for (std::size_t b = 0; b < candidates.size() && keep; ++b) {
                    if (done[b]) continue;
                    if (lcm(lh, lm(candidates[b])).divides(l1)) keep = false;
                }
                for (std::size_t g2 : kept) {
                    if (!keep) break;
                    if (lcm(lh, lm(g2)).divides(l1)) keep = false;
                }
            }
            if (keep) kept.push_back(g1);
        }

        std::vector<Pair> next;
        for (const Pair& p : pairs_) {
            const bool drop = lh.divides(p.lcm) && !(lcm(lm(p.i), lh) == p.lcm) &&
                              !(lcm(lm(p.j), lh) == p.lcm);
            if (!drop) next.push_back(p);
        }
        for (std::size_t g : kept) {
            if (coprime(lh, lm(g))) continue;  // product criterion
            next.push_back(Pair{g, hi, lcm(lm(g), lh)});
        }
        pairs_ = std::move(next);

        for (std::size_t k = 0; k < hi; ++k)
            if (active_[k] && lh.divides(lm(k))) active_[k] = false;
        active_[hi] = true;
    }

    MonomialOrder order_;
    std::size_t n_;
    std::vector<WorkPoly> polys_;
    std::vector<bool> active_;
    std::vector<Pair> pairs_;
};

}  // namespace

IdealData::IdealData(std::vector<MultiPoly> generators) {
    if (generators.empty()) throw std::invalid_argument("ideal needs at least one generator");
    const std::size_t n = generators.front().num_vars();
    for (auto& g : generators) {
        if (g.num_vars() != n) throw DimensionMismatch("ideal generators have different variable counts");
        if (!g.is_zero()) gens_.push_back(std::move(g));
    }
    if (gens_.empty()) throw std::invalid_argument("ideal generated by zero polynomials only");
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(basis.size());
    for (const auto& g : basis) out.push_back(g.leading_term(order).first);
    return out;
}

bool GroebnerBasis::is_unit_ideal() const {
    return basis.size() == 1 && basis.front().is_constant() && !basis.front().is_zero();
}

GroebnerBasis groebner_basis(const IdealData& ideal, MonomialOrder order) {
    const std::size_t n = ideal.num_vars();
    Buchberger engine(order, n);
    // Insert in a canonical order so intermediate work is reproducible.
    std::vector<MultiPoly> gens = ideal.generators();
    std::stable_sort(gens.begin(), gens.end(), [order](const MultiPoly& a, const MultiPoly& b) {
        return order_greater(order, b.leading_term(order).first, a.leading_term(order).first);
    });
    for (const auto& g : gens) {
        engine.insert_generator(g);
        if (engine.has_unit()) break;
    }
    if (!engine.has_unit()) engine.run();
    if (engine.has_unit()) {
        GroebnerBasis unit;
        unit.order = order;
        unit.num_vars = n;
        unit.basis.push_back(MultiPoly::constant(n, Rat(1)));
        return unit;
    }
    return engine.finish();
}

MultiPoly normal_form(const MultiPoly& p, const GroebnerBasis& g) {
    if (p.num_vars() != g.num_vars) throw DimensionMismatch("normal_form: variable count mismatch");
    std::vector<WorkPoly> work;
    work.reserve(g.basis.size());
    for (const auto& b : g.basis) {
        work.push_back(to_work(b, g.order));
        make_monic(work.back());
    }
    std::vector<const WorkPoly*> divisors;
    for (const auto& w : work) divisors.push_back(&w);
    return from_work(reduce(to_work(p, g.order), divisors), g.num_vars);
}

}  // namespace logchern
