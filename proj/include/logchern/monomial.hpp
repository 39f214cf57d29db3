#pragma once

/**
 * @file monomial.hpp
 * @brief Dense exponent vectors and the two monomial orders used by the
 *        Groebner engine (graded reverse lexicographic and lexicographic).
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>

namespace logchern {

/// Upper bound on ambient variable count. The geometry never needs more than
/// three homogeneous coordinates; one spare slot is kept for scratch rings.
inline constexpr std::size_t kMaxVars = 4;

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t num_vars) : n_(check(num_vars)) {}
    Monomial(std::initializer_list<std::uint32_t> exps) : n_(check(exps.size())) {
        std::copy(exps.begin(), exps.end(), e_.begin());
    }

    std::size_t num_vars() const { return n_; }
    std::uint32_t operator[](std::size_t i) const { return e_[i]; }
    std::uint32_t& operator[](std::size_t i) { return e_[i]; }

    std::uint32_t degree() const {
        std::uint32_t d = 0;
        for (std::size_t i = 0; i < n_; ++i) d += e_[i];
        return d;
    }

    bool is_one() const { return degree() == 0; }

    /// True iff this monomial divides `other`.
    bool divides(const Monomial& other) const {
        for (std::size_t i = 0; i < n_; ++i)
            if (e_[i] > other.e_[i]) return false;
        return true;
    }

    /// Index of the only variable with positive exponent, or -1.
    int pure_power_variable() const {
        int var = -1;
        for (std::size_t i = 0; i < n_; ++i) {
            if (e_[i] == 0) continue;
            if (var >= 0) return -1;
            var = static_cast<int>(i);
        }
        return var;
    }

    friend Monomial operator*(Monomial a, const Monomial& b) {
        for (std::size_t i = 0; i < a.n_; ++i) a.e_[i] += b.e_[i];
        return a;
    }

    /// a / b; requires b | a.
    friend Monomial operator/(Monomial a, const Monomial& b) {
        for (std::size_t i = 0; i < a.n_; ++i) a.e_[i] -= b.e_[i];
        return a;
    }

    friend Monomial lcm(Monomial a, const Monomial& b) {
        for (std::size_t i = 0; i < a.n_; ++i) a.e_[i] = std::max(a.e_[i], b.e_[i]);
        return a;
    }

    friend bool coprime(const Monomial& a, const Monomial& b) {
        for (std::size_t i = 0; i < a.n_; ++i)
            if (a.e_[i] != 0 && b.e_[i] != 0) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }

private:
    static std::size_t check(std::size_t n) {
        if (n > kMaxVars) throw std::invalid_argument("too many variables for Monomial");
        return n;
    }

    std::array<std::uint32_t, kMaxVars> e_{};
    std::size_t n_ = 0;
};

enum class MonomialOrder { Grevlex, Lex };

/// Strict "a > b" under graded reverse lexicographic order.
inline bool grevlex_greater(const Monomial& a, const Monomial& b) {
    const auto da = a.degree();
    const auto db = b.degree();
    if (da != db) return da > db;
    for (std::size_t i = a.num_vars(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

/// Strict "a > b" under lexicographic order with variable 0 largest.
inline bool lex_greater(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.num_vars(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

inline bool order_greater(MonomialOrder order, const Monomial& a, const Monomial& b) {
    return order == MonomialOrder::Grevlex ? grevlex_greater(a, b) : lex_greater(a, b);
}

/// Comparator placing larger monomials first.
struct OrderDescending {
    MonomialOrder order = MonomialOrder::Grevlex;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return order_greater(order, a, b);
    }
};

}  // namespace logchern
