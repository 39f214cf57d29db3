#include "logchern/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "logchern/errors.hpp"

namespace logchern {

MultiPoly::MultiPoly(std::size_t num_vars)
    : num_vars_(num_vars), terms_(OrderDescending{MonomialOrder::Grevlex}) {
    if (num_vars > kMaxVars) throw std::invalid_argument("too many variables");
}

MultiPoly MultiPoly::constant(std::size_t num_vars, const Rat& c) {
    MultiPoly p(num_vars);
    p.add_term(Monomial(num_vars), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t num_vars, std::size_t index) {
    if (index >= num_vars) throw std::out_of_range("variable index out of range");
    Monomial m(num_vars);
    m[index] = 1;
    return term(Rat(1), m);
}

MultiPoly MultiPoly::term(const Rat& c, const Monomial& m) {
    MultiPoly p(m.num_vars());
    p.add_term(m, c);
    return p;
}

MultiPoly MultiPoly::from_terms(std::size_t num_vars,
                                const std::vector<std::pair<Monomial, Rat>>& terms) {
    MultiPoly p(num_vars);
    for (const auto& [m, c] : terms) {
        if (m.num_vars() != num_vars) throw DimensionMismatch("monomial length mismatch");
        p.add_term(m, c);
    }
    return p;
}

void MultiPoly::add_term(const Monomial& m, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rat MultiPoly::coefficient(const Monomial& m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

int MultiPoly::total_degree() const {
    // Grevlex is degree-compatible, so the first term has maximal degree.
    return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const auto d = terms_.begin()->first.degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const auto& t) { return t.first.degree() == d; });
}

std::pair<Monomial, Rat> MultiPoly::leading_term(MonomialOrder order) const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    if (order == MonomialOrder::Grevlex) return *terms_.begin();
    auto best = terms_.begin();
    for (auto it = std::next(best); it != terms_.end(); ++it)
        if (lex_greater(it->first, best->first)) best = it;
    return *best;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.num_vars_ != num_vars_) throw DimensionMismatch("polynomial variable counts differ");
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (o.num_vars_ != num_vars_) throw DimensionMismatch("polynomial variable counts differ");
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.num_vars_ != b.num_vars_) throw DimensionMismatch("polynomial variable counts differ");
    MultiPoly out(a.num_vars_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.num_vars_ == b.num_vars_ && a.terms_.size() == b.terms_.size() &&
           std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(),
                      [](const auto& x, const auto& y) {
                          return x.first == y.first && x.second == y.second;
                      });
}

MultiPoly MultiPoly::mul_term(const Rat& c, const Monomial& m) const {
    MultiPoly out(num_vars_);
    if (c.is_zero()) return out;
    // Multiplying by a monomial preserves any monomial order, so the hint is exact.
    for (const auto& [mono, coeff] : terms_)
        out.terms_.emplace_hint(out.terms_.end(), mono * m, coeff * c);
    return out;
}

MultiPoly MultiPoly::truncated_below(unsigned bound) const {
    MultiPoly out(num_vars_);
    for (const auto& [m, c] : terms_)
        if (m.degree() < bound) out.terms_.emplace_hint(out.terms_.end(), m, c);
    return out;
}

Rat MultiPoly::evaluate(std::span<const Rat> point) const {
    if (point.size() != num_vars_) throw DimensionMismatch("evaluation point has wrong length");
    Rat sum(0);
    for (const auto& [m, c] : terms_) {
        Rat v = c;
        for (std::size_t i = 0; i < num_vars_; ++i)
            if (m[i] != 0) v *= pow(point[i], m[i]);
        sum += v;
    }
    return sum;
}

std::string MultiPoly::to_string(std::span<const std::string> vars) const {
    if (vars.size() != num_vars_) throw DimensionMismatch("variable name count mismatch");
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = c.sign() < 0;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const Rat abs = negative ? -c : c;
        bool need_star = false;
        if (!abs.is_one() || m.is_one()) {
            os << abs.to_string();
            need_star = true;
        }
        for (std::size_t i = 0; i < num_vars_; ++i) {
            if (m[i] == 0) continue;
            if (need_star) os << '*';
            os << vars[i];
            if (m[i] > 1) os << '^' << m[i];
            need_star = true;
        }
    }
    return os.str();
}

MultiPoly pow(const MultiPoly& p, unsigned exponent) {
    MultiPoly result = MultiPoly::constant(p.num_vars(), Rat(1));
    MultiPoly base = p;
    while (exponent > 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent > 0) base = base * base;
    }
    return result;
}

MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return a + b;
        case ArithOp::Sub: return a - b;
        case ArithOp::Mul: return a * b;
    }
    throw std::invalid_argument("unknown arithmetic op");
}

MultiPoly partial_derivative(const MultiPoly& p, std::size_t var_index) {
    if (var_index >= p.num_vars()) throw std::out_of_range("derivative variable out of range");
    std::vector<std::pair<Monomial, Rat>> out;
    for (const auto& [m, c] : p.terms()) {
        if (m[var_index] == 0) continue;
        Monomial d = m;
        d[var_index] -= 1;
        out.emplace_back(d, c * Rat(static_cast<long>(m[var_index])));
    }
    return MultiPoly::from_terms(p.num_vars(), out);
}

MultiPoly substitute_linear(const MultiPoly& p, const RatMatrix& m) {
    const std::size_t n = p.num_vars();
    if (m.size() != n || !is_square(m)) throw DimensionMismatch("substitution matrix has wrong shape");
    if (determinant(m).is_zero()) throw std::domain_error("substitution matrix is singular");

    std::vector<MultiPoly> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        MultiPoly row(n);
        for (std::size_t j = 0; j < n; ++j) row += MultiPoly::variable(n, j) * m[i][j];
        images.push_back(std::move(row));
    }
    // Cache powers of each image; degrees are small.
    std::vector<std::vector<MultiPoly>> powers(n);
    MultiPoly out(n);
    for (const auto& [mono, c] : p.terms()) {
        MultiPoly t = MultiPoly::constant(n, c);
        for (std::size_t i = 0; i < n; ++i) {
            auto& cache = powers[i];
            if (cache.empty()) cache.push_back(MultiPoly::constant(n, Rat(1)));
            while (cache.size() <= mono[i]) cache.push_back(cache.back() * images[i]);
            if (mono[i] > 0) t = t * cache[mono[i]];
        }
        out += t;
    }
    return out;
}

MultiPoly shift(const MultiPoly& p, std::span<const Rat> offset) {
    const std::size_t n = p.num_vars();
    if (offset.size() != n) throw DimensionMismatch("shift offset has wrong length");
    std::vector<std::vector<MultiPoly>> powers(n);
    MultiPoly out(n);
    for (const auto& [mono, c] : p.terms()) {
        MultiPoly t = MultiPoly::constant(n, c);
        for (std::size_t i = 0; i < n; ++i) {
            auto& cache = powers[i];
            if (cache.empty()) cache.push_back(MultiPoly::constant(n, Rat(1)));
            const MultiPoly linear = MultiPoly::variable(n, i) + MultiPoly::constant(n, offset[i]);
            while (cache.size() <= mono[i]) cache.push_back(cache.back() * linear);
            if (mono[i] > 0) t = t * cache[mono[i]];
        }
        out += t;
    }
    return out;
}

MultiPoly dehomogenize(const MultiPoly& f, std::size_t chart_var) {
    if (chart_var >= f.num_vars()) throw std::out_of_range("chart variable out of range");
    if (!f.is_homogeneous())
        throw ValidationError(ValidationError::Kind::NotHomogeneous, "polynomial is not homogeneous");
    const std::size_t n = f.num_vars() - 1;
    std::vector<std::pair<Monomial, Rat>> out;
    for (const auto& [m, c] : f.terms()) {
        Monomial r(n);
        for (std::size_t i = 0, k = 0; i < f.num_vars(); ++i)
            if (i != chart_var) r[k++] = m[i];
        out.emplace_back(r, c);
    }
    return MultiPoly::from_terms(n, out);
}

MultiPoly homogenize(const MultiPoly& f, unsigned degree, std::size_t chart_var) {
    const std::size_t n = f.num_vars() + 1;
    if (chart_var >= n) throw std::out_of_range("chart variable out of range");
    if (f.total_degree() > static_cast<int>(degree))
        throw std::invalid_argument("homogenization degree below polynomial degree");
    std::vector<std::pair<Monomial, Rat>> out;
    for (const auto& [m, c] : f.terms()) {
        Monomial r(n);
        for (std::size_t i = 0, k = 0; i < n; ++i)
            r[i] = (i == chart_var) ? degree - m.degree() : m[k++];
        out.emplace_back(r, c);
    }
    return MultiPoly::from_terms(n, out);
}

}  // namespace logchern
