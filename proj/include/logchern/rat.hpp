#pragma once

/**
 * @file rat.hpp
 * @brief Exact rational numbers backed by GMP.
 *
 * A Rat is always stored in lowest terms with a positive denominator, so
 * structural equality is value equality and zero is uniquely 0/1.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace logchern {

class Rat {
public:
    Rat() = default;
    Rat(long value) : value_(value) {}  // NOLINT: implicit from integers is intended
    Rat(int value) : value_(value) {}   // NOLINT
    Rat(unsigned long value) : value_(value) {}  // NOLINT
    Rat(const mpz_class& value) : value_(value) {}  // NOLINT
    Rat(const mpz_class& num, const mpz_class& den);
    explicit Rat(const mpq_class& value) : value_(value) { value_.canonicalize(); }

    /// Parses "a" or "a/b" with optional leading sign. Throws std::invalid_argument.
    static Rat from_string(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }
    const mpq_class& gmp() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_one() const { return value_ == 1; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    /// "a" for integers, "a/b" otherwise.
    std::string to_string() const;

    Rat operator-() const { return Rat(mpq_class(-value_)); }
    Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
    Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
    Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
    /// Throws std::domain_error on division by zero.
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

private:
    mpq_class value_{0};
};

Rat pow(const Rat& base, unsigned exponent);

}  // namespace logchern
