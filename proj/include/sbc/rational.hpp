#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace sbc {

__extension__ using wide = __int128;

/// Exact rational in lowest terms with positive denominator. Arithmetic is carried out
/// in 128 bits and throws std::overflow_error when the reduced result leaves int64.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t value) : num_{value} {}  // NOLINT: implicit from integers
    Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

    constexpr std::int64_t numerator() const { return num_; }
    constexpr std::int64_t denominator() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_wide(static_cast<wide>(a.num_) * b.den_ + static_cast<wide>(b.num_) * a.den_,
                         static_cast<wide>(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from_wide(static_cast<wide>(a.num_) * b.den_ - static_cast<wide>(b.num_) * a.den_,
                         static_cast<wide>(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_wide(static_cast<wide>(a.num_) * b.num_, static_cast<wide>(a.den_) * b.den_);
    }
    Rational operator-() const { return from_wide(-static_cast<wide>(num_), den_); }

    friend constexpr bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return static_cast<wide>(a.num_) * b.den_ <=> static_cast<wide>(b.num_) * a.den_;
    }

private:
    void assign(std::int64_t num, std::int64_t den) { *this = from_wide(num, den); }

    static Rational from_wide(wide num, wide den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        wide a = num < 0 ? -num : num;
        wide b = den;
        while (b != 0) {
            const wide t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            num /= a;
            den /= a;
        }
        constexpr wide lo = INT64_MIN;
        constexpr wide hi = INT64_MAX;
        if (num < lo || num > hi || den > hi) throw std::overflow_error("rational out of 64-bit range");
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace sbc
