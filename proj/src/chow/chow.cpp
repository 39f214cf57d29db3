#include "logchern/chow.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "logchern/errors.hpp"

namespace logchern {

ChowClass::ChowClass(std::size_t ambient_dim) : coeffs_(ambient_dim + 1) {}

ChowClass::ChowClass(std::size_t ambient_dim, std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(ambient_dim + 1);
}

ChowClass::ChowClass(std::size_t ambient_dim, std::initializer_list<long> coeffs)
    : coeffs_(ambient_dim + 1) {
    std::size_t i = 0;
    for (long c : coeffs) {
        if (i > ambient_dim) break;
        coeffs_[i++] = Rat(c);
    }
}

ChowClass ChowClass::unit(std::size_t ambient_dim) { return monomial(ambient_dim, 0); }

ChowClass ChowClass::monomial(std::size_t ambient_dim, std::size_t codim, const Rat& c) {
    ChowClass out(ambient_dim);
    if (codim <= ambient_dim) out.coeffs_[codim] = c;
    return out;
}

bool ChowClass::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c.is_zero(); });
}

bool ChowClass::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c.is_integer(); });
}

std::string ChowClass::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rat& c = coeffs_[i];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        if (first) os << (negative ? "-" : "");
        else os << (negative ? " - " : " + ");
        first = false;
        const Rat abs = negative ? -c : c;
        if (i == 0 || !abs.is_one()) os << abs;
        if (i >= 1) os << 'H';
        if (i >= 2) os << '^' << i;
    }
    return first ? "0" : os.str();
}

ChowClass ChowClass::operator-() const {
    ChowClass out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

ChowClass& ChowClass::operator+=(const ChowClass& o) {
    if (o.coeffs_.size() != coeffs_.size()) throw DimensionMismatch("Chow classes live in different P^n");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& o) {
    if (o.coeffs_.size() != coeffs_.size()) throw DimensionMismatch("Chow classes live in different P^n");
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

ChowClass& ChowClass::operator*=(const Rat& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

ChowClass operator*(const ChowClass& a, const ChowClass& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) throw DimensionMismatch("Chow classes live in different P^n");
    const std::size_t n = a.ambient_dim();
    ChowClass out(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j <= n; ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return out;
}

ChowClass class_mul(const ChowClass& a, const ChowClass& b) { return a * b; }

ChowClass class_inverse(const ChowClass& a) {
    if (a[0].is_zero()) throw std::domain_error("class with zero degree-0 part is not a unit");
    const std::size_t n = a.ambient_dim();
    std::vector<Rat> b(n + 1);
    b[0] = Rat(1) / a[0];
    for (std::size_t k = 1; k <= n; ++k) {
        Rat acc(0);
        for (std::size_t i = 1; i <= k; ++i) acc += a[i] * b[k - i];
        b[k] = -acc / a[0];
    }
    return ChowClass(n, std::move(b));
}

ChowClass class_pow(const ChowClass& a, unsigned exponent) {
    ChowClass out = ChowClass::unit(a.ambient_dim());
    for (unsigned k = 0; k < exponent; ++k) out = out * a;
    return out;
}

ChowClass dual(const ChowClass& a) {
    std::vector<Rat> c = a.coeffs();
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return ChowClass(a.ambient_dim(), std::move(c));
}

ChowClass line_bundle_chern(const DivisorClass& d, std::size_t ambient_dim) {
    return ChowClass::unit(ambient_dim) + ChowClass::monomial(ambient_dim, 1, d.degree);
}

ChowClass tensor_by_divisor(const ChowClass& a, const DivisorClass& d) {
    const std::size_t n = a.ambient_dim();
    const ChowClass twist = class_inverse(line_bundle_chern(d, n));
    ChowClass out(n);
    ChowClass factor = ChowClass::unit(n);  // (1 + dH)^(-i)
    for (std::size_t i = 0; i <= n; ++i) {
        out += ChowClass::monomial(n, i, a[i]) * factor;
        factor = factor * twist;
    }
    return out;
}

ChowClass segre_of_divisor(unsigned degree, std::size_t ambient_dim) {
    if (degree < 1) throw std::invalid_argument("divisor degree must be positive");
    const DivisorClass d{Rat(static_cast<long>(degree))};
    return ChowClass::monomial(ambient_dim, 1, d.degree) *
           class_inverse(line_bundle_chern(d, ambient_dim));
}

ChowClass tangent_chern(std::size_t ambient_dim) {
    if (ambient_dim < 1) throw std::invalid_argument("ambient dimension must be positive");
    const ChowClass hyperplane = line_bundle_chern(DivisorClass{Rat(1)}, ambient_dim);
    return class_pow(hyperplane, static_cast<unsigned>(ambient_dim + 1));
}

}  // namespace logchern
