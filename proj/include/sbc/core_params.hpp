#pragma once

// Shared vocabulary: exact scalars, signs and group descriptors.

#include "sbc/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sbc {

/// Out-of-range parameters (the precondition of a formula is violated).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A scalar that a formula cannot consume (Generic or non-real where a real is needed).
class UnsupportedScalarError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed textual input.
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);
bool is_integer(const Rational& r);

enum class Sign : int { plus = 1, minus = -1 };

constexpr Sign operator*(Sign a, Sign b) {
    return static_cast<int>(a) == static_cast<int>(b) ? Sign::plus : Sign::minus;
}
constexpr Sign operator-(Sign s) { return s * Sign::minus; }

/// (-1)^k for any integer k.
constexpr Sign sign_pow(std::int64_t k) { return k % 2 == 0 ? Sign::plus : Sign::minus; }

constexpr int to_int(Sign s) { return static_cast<int>(s); }

std::string_view to_string(Sign s);
Sign parse_sign(std::string_view text);

struct GaussianRational {
    Rational re{0};
    Rational im{0};

    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

/// lambda / nu: an exact Gaussian rational or the Generic token, which avoids
/// every integrality and equality condition.
class ScalarParam {
public:
    ScalarParam() = default;  // Exact(0)
    ScalarParam(std::int64_t k) : value_{GaussianRational{Rational{k}, Rational{0}}} {}
    ScalarParam(Rational re, Rational im = Rational{0}) : value_{GaussianRational{re, im}} {}

    static ScalarParam generic() {
        ScalarParam s;
        s.value_.reset();
        return s;
    }

    bool is_generic() const { return !value_.has_value(); }
    bool is_real() const { return value_ && value_->im == 0; }

    /// Throws UnsupportedScalarError when Generic.
    const GaussianRational& exact() const;
    /// Throws UnsupportedScalarError unless Exact with zero imaginary part.
    Rational real() const;

    /// The integer value when this scalar is an integer, otherwise nullopt.
    std::optional<std::int64_t> as_integer() const;

    friend bool operator==(const ScalarParam&, const ScalarParam&) = default;

private:
    std::optional<GaussianRational> value_{GaussianRational{}};
};

bool scalar_is_integer(const ScalarParam& s);
bool scalar_equals_integer(const ScalarParam& s, std::int64_t k);

/// Textual forms: `a`, `a/b`, `a/b+c/d*i`, `a/b-c/d*i`, `generic`.
std::string to_string(const ScalarParam& s);
ScalarParam parse_scalar(std::string_view text);

/// SO(p,q), p + q >= 1.
struct GroupDescriptor {
    int p = 0;
    int q = 0;

    static GroupDescriptor so(int p, int q);

    int dimension_of_form() const { return p + q; }
    /// Same form with the two signature entries swapped: SO(p,q) ~ SO(q,p).
    GroupDescriptor swapped() const { return {q, p}; }

    friend auto operator<=>(const GroupDescriptor&, const GroupDescriptor&) = default;
};

/// "SO(p,q)"; compact factors with q = 0 print as "SO(p)".
std::string to_string(const GroupDescriptor& g);

}  // namespace sbc
