#include "logchern/univariate.hpp"

#include <algorithm>
#include <stdexcept>

namespace logchern::univariate {

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const Poly& p) {
    for (std::size_t i = p.size(); i-- > 0;)
        if (!p[i].is_zero()) return static_cast<int>(i);
    return -1;
}

Poly derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rat(static_cast<long>(i)));
    trim(d);
    return d;
}

Poly remainder(Poly a, const Poly& b) {
    trim(a);
    const int db = degree(b);
    if (db < 0) throw std::domain_error("polynomial remainder by zero");
    while (degree(a) >= db) {
        const int da = degree(a);
        const Rat factor = a[da] / b[db];
        const int shift = da - db;
        for (int i = 0; i <= db; ++i) a[i + shift] -= factor * b[i];
        trim(a);
    }
    return a;
}

namespace {

Poly monic(Poly p) {
    trim(p);
    if (p.empty()) return p;
    const Rat lc = p.back();
    for (auto& c : p) c /= lc;
    return p;
}

Poly exact_quotient(Poly a, const Poly& b) {
    trim(a);
    const int db = degree(b);
    Poly q(static_cast<std::size_t>(std::max(0, degree(a) - db + 1)));
    while (degree(a) >= db) {
        const int da = degree(a);
        const Rat factor = a[da] / b[db];
        q[da - db] = factor;
        for (int i = 0; i <= db; ++i) a[i + da - db] -= factor * b[i];
        trim(a);
    }
    trim(q);
    return q;
}

struct Factoring {
    std::vector<std::pair<mpz_class, unsigned>> primes;
    bool complete = true;
};

Factoring factor_integer(mpz_class n) {
    Factoring f;
    if (n < 0) n = -n;
    auto take = [&](const mpz_class& p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) f.primes.emplace_back(p, e);
    };
    take(2);
    constexpr unsigned long kTrialBound = 1'000'000;
    for (unsigned long d = 3; d <= kTrialBound; d += 2) {
        if (mpz_class(d) * d > n) break;
        take(mpz_class(d));
    }
    if (n > 1) {
        const bool small_enough = n <= mpz_class(kTrialBound) * mpz_class(kTrialBound);
        if (small_enough || mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
            f.primes.emplace_back(n, 1);
        } else {
            f.complete = false;
        }
    }
    return f;
}

std::vector<mpz_class> divisors(const Factoring& f) {
    std::vector<mpz_class> out{1};
    for (const auto& [p, e] : f.primes) {
        const std::size_t base = out.size();
        mpz_class power = 1;
        for (unsigned k = 1; k <= e; ++k) {
            power *= p;
            for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
        }
    }
    return out;
}

}  // namespace

Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a));
}

Poly squarefree_part(const Poly& p) {
    Poly m = monic(p);
    if (degree(m) <= 0) return m;
    const Poly g = gcd(m, derivative(m));
    return monic(exact_quotient(m, g));
}

Rat evaluate(const Poly& p, const Rat& x) {
    Rat acc(0);
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

RootSearch rational_roots(const Poly& p) {
    Poly sf = squarefree_part(p);
    if (sf.empty()) throw std::invalid_argument("rational_roots of the zero polynomial");
    RootSearch out;
    if (degree(sf) <= 0) return out;

    if (sf.front().is_zero()) {
        out.roots.emplace_back(0);
        sf.erase(sf.begin());  // divide by x; squarefree so only once
    }
    if (degree(sf) > 0) {
        // Primitive integer multiple.
        mpz_class den_lcm = 1;
        for (const auto& c : sf) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
        std::vector<mpz_class> ints;
        for (const auto& c : sf) ints.push_back(c.numerator() * (den_lcm / c.denominator()));
        const Factoring lead = factor_integer(ints.back());
        const Factoring tail = factor_integer(ints.front());
        if (!lead.complete || !tail.complete) {
            out.exhaustive = false;
        } else {
            const auto qs = divisors(lead);
            const auto ps = divisors(tail);
            for (const auto& q : qs) {
                for (const auto& pnum : ps) {
                    mpz_class g;
                    mpz_gcd(g.get_mpz_t(), pnum.get_mpz_t(), q.get_mpz_t());
                    if (g != 1) continue;
                    for (int sign : {1, -1}) {
                        const Rat candidate(mpz_class(pnum * sign), q);
                        if (evaluate(sf, candidate).is_zero()) out.roots.push_back(candidate);
                    }
                }
            }
        }
    }
    std::sort(out.roots.begin(), out.roots.end());
    out.roots.erase(std::unique(out.roots.begin(), out.roots.end()), out.roots.end());
    return out;
}

}  // namespace logchern::univariate
