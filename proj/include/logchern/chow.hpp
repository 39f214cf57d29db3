#pragma once

/**
 * @file chow.hpp
 * @brief Exact arithmetic in A_*(P^n) (x) Q = Q[H]/(H^(n+1)).
 *
 * Classes are graded by codimension: coefficient i multiplies H^i, so the
 * fundamental class [P^n] is the unit 1 and a point is H^n. Products,
 * inverses and twists are truncated at H^n.
 */

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "logchern/rat.hpp"

namespace logchern {

class ChowClass {
public:
    /// The zero class in P^n.
    explicit ChowClass(std::size_t ambient_dim);
    /// Coefficients of H^0, H^1, ...; missing entries are zero, entries
    /// beyond H^n are dropped.
    ChowClass(std::size_t ambient_dim, std::vector<Rat> coeffs);
    ChowClass(std::size_t ambient_dim, std::initializer_list<long> coeffs);

    static ChowClass unit(std::size_t ambient_dim);
    /// c * H^codim.
    static ChowClass monomial(std::size_t ambient_dim, std::size_t codim, const Rat& c = Rat(1));

    std::size_t ambient_dim() const { return coeffs_.size() - 1; }
    const Rat& operator[](std::size_t codim) const { return coeffs_.at(codim); }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_integral() const;
    /// e.g. "1 + 2H^2", "3H - 9H^2", "0".
    std::string to_string() const;

    ChowClass operator-() const;
    ChowClass& operator+=(const ChowClass& o);
    ChowClass& operator-=(const ChowClass& o);
    ChowClass& operator*=(const Rat& c);
    friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
    friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
    friend ChowClass operator*(ChowClass a, const Rat& c) { return a *= c; }
    friend ChowClass operator*(const Rat& c, ChowClass a) { return a *= c; }
    friend ChowClass operator*(const ChowClass& a, const ChowClass& b);
    friend bool operator==(const ChowClass&, const ChowClass&) = default;

private:
    std::vector<Rat> coeffs_;
};

/// c_1 of a line bundle O(d) on P^n, recorded by its degree d.
struct DivisorClass {
    Rat degree;
    friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
        return {a.degree + b.degree};
    }
    friend DivisorClass operator-(const DivisorClass& a) { return {-a.degree}; }
};

/// Throws DimensionMismatch on different ambient dimensions.
ChowClass class_mul(const ChowClass& a, const ChowClass& b);

/// Truncated power-series inverse. Throws std::domain_error if a_0 = 0.
ChowClass class_inverse(const ChowClass& a);

ChowClass class_pow(const ChowClass& a, unsigned exponent);

/// a_i -> (-1)^i a_i.
ChowClass dual(const ChowClass& a);

/// sum_i a_i H^i / (1 + dH)^i.
ChowClass tensor_by_divisor(const ChowClass& a, const DivisorClass& d);

/// Total Chern class 1 + dH of O(d).
ChowClass line_bundle_chern(const DivisorClass& d, std::size_t ambient_dim);

/// s(D, P^n) = dH / (1 + dH) for a hypersurface of degree d >= 1.
ChowClass segre_of_divisor(unsigned degree, std::size_t ambient_dim);

/// c(T P^n) = (1 + H)^(n+1).
ChowClass tangent_chern(std::size_t ambient_dim);

}  // namespace logchern
