#pragma once

// Test-only reference computations. Nothing here calls into the ideals,
// localinv or chow implementations: jets are expanded by hand and ranks come
// from a plain dense Gaussian elimination over mpq_class.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "logchern/multipoly.hpp"

namespace oracle {

using Exp = std::pair<unsigned, unsigned>;
using Jet = std::map<Exp, mpq_class>;

inline mpz_class binomial(unsigned n, unsigned k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

/// g(x + px, y + py) for a polynomial in two variables, as an exponent map.
inline Jet translate(const logchern::MultiPoly& g, const mpq_class& px, const mpq_class& py) {
    Jet out;
    for (const auto& [m, c] : g.terms()) {
        const unsigned a = m[0];
        const unsigned b = m[1];
        for (unsigned i = 0; i <= a; ++i) {
            mpq_class pa = 1;
            for (unsigned t = 0; t < a - i; ++t) pa *= px;
            for (unsigned j = 0; j <= b; ++j) {
                mpq_class pb = 1;
                for (unsigned t = 0; t < b - j; ++t) pb *= py;
                out[{i, j}] += c.gmp() * mpq_class(binomial(a, i)) * mpq_class(binomial(b, j)) * pa * pb;
            }
        }
    }
    for (auto it = out.begin(); it != out.end();) it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

inline std::size_t dense_rank(std::vector<std::vector<mpq_class>> rows) {
    std::size_t r = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[r]);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k == r || rows[k][c] == 0) continue;
            const mpq_class f = rows[k][c] / rows[r][c];
            for (std::size_t j = c; j < cols; ++j) rows[k][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

/// dim Q[x,y] / ((gens) + m^N) with m the maximal ideal of `point`.
inline std::size_t jet_dim(const std::vector<logchern::MultiPoly>& gens, const mpq_class& px,
                           const mpq_class& py, unsigned n) {
    std::map<Exp, std::size_t> column;
    for (unsigned d = 0; d < n; ++d)
        for (unsigned i = 0; i <= d; ++i) column.emplace(Exp{i, d - i}, column.size());
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& g : gens) {
        const Jet t = translate(g, px, py);
        for (unsigned d = 0; d < n; ++d) {
            for (unsigned i = 0; i <= d; ++i) {
                std::vector<mpq_class> row(column.size());
                bool any = false;
                for (const auto& [e, c] : t) {
                    const Exp shifted{e.first + i, e.second + d - i};
                    if (shifted.first + shifted.second >= n) continue;
                    row[column.at(shifted)] = c;
                    any = true;
                }
                if (any) rows.push_back(std::move(row));
            }
        }
    }
    return column.size() - dense_rank(std::move(rows));
}

/// Local dimension: the value at the first N where three consecutive jet
/// orders agree. Returns 0 with ok=false if nothing stabilizes below cap.
inline std::size_t local_dim(const std::vector<logchern::MultiPoly>& gens, const mpq_class& px,
                             const mpq_class& py, unsigned cap, bool* ok = nullptr) {
    std::size_t a = jet_dim(gens, px, py, 1);
    std::size_t b = jet_dim(gens, px, py, 2);
    for (unsigned n = 3; n <= cap; ++n) {
        const std::size_t c = jet_dim(gens, px, py, n);
        if (a == b && b == c) {
            if (ok) *ok = true;
            return a;
        }
        a = b;
        b = c;
    }
    if (ok) *ok = false;
    return 0;
}

// Truncated power series in one variable, coefficients low degree first.
using Series = std::vector<mpq_class>;

inline Series series_mul(const Series& a, const Series& b) {
    Series out(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

/// (1 + t h)^{-1} by the geometric series.
inline Series one_plus_inverse(const mpq_class& t, std::size_t len) {
    Series out(len, 0);
    mpq_class p = 1;
    for (std::size_t i = 0; i < len; ++i) {
        out[i] = p;
        p *= -t;
    }
    return out;
}

/// Small hand-rolled generators for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    logchern::Rat rat(long range = 9) {
        const long den = integer(1, 4);
        return logchern::Rat(integer(-range, range), den);
    }

    logchern::MultiPoly poly(std::size_t vars, unsigned max_deg, std::size_t max_terms) {
        logchern::MultiPoly p(vars);
        const long count = integer(0, static_cast<long>(max_terms));
        for (long k = 0; k < count; ++k) {
            logchern::Monomial m(vars);
            for (std::size_t v = 0; v < vars; ++v) m[v] = static_cast<std::uint32_t>(integer(0, max_deg));
            p += logchern::MultiPoly::term(rat(), m);
        }
        return p;
    }

    logchern::MultiPoly homogeneous(unsigned degree, std::size_t max_terms) {
        logchern::MultiPoly p(3);
        const std::size_t count = static_cast<std::size_t>(integer(1, static_cast<long>(max_terms)));
        for (std::size_t k = 0; k < count; ++k) {
            const unsigned a = static_cast<unsigned>(integer(0, degree));
            const unsigned b = static_cast<unsigned>(integer(0, degree - a));
            p += logchern::MultiPoly::term(rat(), logchern::Monomial{a, b, degree - a - b});
        }
        return p;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace oracle
