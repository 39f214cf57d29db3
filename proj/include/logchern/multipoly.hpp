#pragma once

/**
 * @file multipoly.hpp
 * @brief Multivariate polynomials with exact rational coefficients.
 *
 * Terms are kept in a map sorted by descending graded reverse lexicographic
 * order and never hold a zero coefficient, so two polynomials over the same
 * variable count are equal iff their term maps are equal. Values are
 * immutable after construction except through the arithmetic operators.
 */

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "logchern/matrix.hpp"
#include "logchern/monomial.hpp"
#include "logchern/rat.hpp"

namespace logchern {

using TermMap = std::map<Monomial, Rat, OrderDescending>;

class MultiPoly {
public:
    MultiPoly() : MultiPoly(0) {}
    explicit MultiPoly(std::size_t num_vars);

    static MultiPoly constant(std::size_t num_vars, const Rat& c);
    static MultiPoly variable(std::size_t num_vars, std::size_t index);
    static MultiPoly term(const Rat& c, const Monomial& m);
    /// Builds from arbitrary (monomial, coefficient) pairs; like terms are
    /// merged and zero coefficients dropped.
    static MultiPoly from_terms(std::size_t num_vars,
                                const std::vector<std::pair<Monomial, Rat>>& terms);

    std::size_t num_vars() const { return num_vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat coefficient(const Monomial& m) const;

    /// Total degree; -1 for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous() const;

    /// Largest term under `order`. Requires a nonzero polynomial.
    std::pair<Monomial, Rat> leading_term(MonomialOrder order = MonomialOrder::Grevlex) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rat& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rat& c) { return a *= c; }
    friend MultiPoly operator*(const Rat& c, MultiPoly a) { return a *= c; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b);

    /// Multiply by c * m in one pass.
    MultiPoly mul_term(const Rat& c, const Monomial& m) const;

    /// Keep only terms of total degree < bound.
    MultiPoly truncated_below(unsigned bound) const;

    Rat evaluate(std::span<const Rat> point) const;

    /// Canonical text using `vars` as variable names, e.g. "x^2 - 3/2*y + 1".
    std::string to_string(std::span<const std::string> vars) const;

private:
    void add_term(const Monomial& m, const Rat& c);

    std::size_t num_vars_;
    TermMap terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned exponent);

enum class ArithOp { Add, Sub, Mul };

/// Throws DimensionMismatch if the variable counts differ.
MultiPoly poly_arith(const MultiPoly& a, const MultiPoly& b, ArithOp op);

/// Formal partial derivative. Throws std::out_of_range for a bad index.
MultiPoly partial_derivative(const MultiPoly& p, std::size_t var_index);

/// p composed with x -> M x, i.e. variable i is replaced by sum_j M[i][j] x_j.
/// Throws std::domain_error if M is singular, DimensionMismatch on shape.
MultiPoly substitute_linear(const MultiPoly& p, const RatMatrix& m);

/// p(x + offset): translates `offset` to the origin.
MultiPoly shift(const MultiPoly& p, std::span<const Rat> offset);

/// Sets variable `chart_var` to 1 and drops it. Throws ValidationError
/// (NotHomogeneous) when F is not homogeneous.
MultiPoly dehomogenize(const MultiPoly& f, std::size_t chart_var);

/// Inverse of dehomogenize: inserts a new variable at `chart_var` and pads
/// every term to `degree`. Throws std::invalid_argument if degree < deg f.
MultiPoly homogenize(const MultiPoly& f, unsigned degree, std::size_t chart_var);

}  // namespace logchern
