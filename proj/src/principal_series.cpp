#include "sbc/principal_series.hpp"

#include <algorithm>

namespace sbc {

namespace {

void require_half_range(int n, int i, const char* op) {
    if (n < 1) throw DomainError(std::string(op) + ": requires n >= 1 (got n = " + std::to_string(n) + ")");
    if (i < 0 || i > n / 2) {
        throw DomainError(std::string(op) + ": requires 0 <= i <= floor(n/2) (got n = " + std::to_string(n) +
                          ", i = " + std::to_string(i) + ")");
    }
}

void require_same_length(const InfCharVector& a, const InfCharVector& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("weyl_equivalent: length mismatch (" + std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()) + ")");
    }
}

std::vector<Rational> sorted_abs(const InfCharVector& v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(x < 0 ? -x : x);
    std::sort(out.begin(), out.end());
    return out;
}

int negative_count(const InfCharVector& v) {
    return static_cast<int>(std::count_if(v.begin(), v.end(), [](const Rational& x) { return x < 0; }));
}

}  // namespace

PsrDescriptor PsrDescriptor::make(int n, int degree, Sign sign, ScalarParam scalar, HalfSpin half_spin) {
    if (n < 1) throw DomainError("principal series: requires n >= 1 (got n = " + std::to_string(n) + ")");
    if (degree < 0 || degree > n) {
        throw DomainError("principal series: requires 0 <= degree <= n (got n = " + std::to_string(n) +
                          ", degree = " + std::to_string(degree) + ")");
    }
    if (half_spin != HalfSpin::none && n != 2 * degree) {
        throw DomainError("principal series: the half-spin summands exist only when n = 2*degree");
    }
    return PsrDescriptor{n, degree, sign, std::move(scalar), half_spin};
}

PsrDescriptor PsrDescriptor::normalized() const {
    PsrDescriptor out = *this;
    out.degree = normalize_degree(n, degree);
    return out;
}

InfCharVector rho_vector(int n) {
    if (n < 1) throw DomainError("rho_vector: requires n >= 1 (got n = " + std::to_string(n) + ")");
    InfCharVector out;
    for (int k = 0; k <= n / 2; ++k) out.push_back(Rational{n, 2} - k);
    return out;
}

InfCharVector infinitesimal_character(int n, int i, const ScalarParam& lambda) {
    require_half_range(n, i, "infinitesimal_character");
    const Rational lam = lambda.real();
    InfCharVector out;
    for (int k = 0; k <= n / 2; ++k) {
        if (k != i) out.push_back(Rational{n, 2} - k);
    }
    out.push_back(lam - Rational{n, 2});
    return out;
}

bool has_rho_infchar(int n, int i, const ScalarParam& lambda) {
    require_half_range(n, i, "has_rho_infchar");
    return scalar_equals_integer(lambda, i) || scalar_equals_integer(lambda, n - i);
}

bool weyl_equivalent_typeB(const InfCharVector& a, const InfCharVector& b) {
    require_same_length(a, b);
    return sorted_abs(a) == sorted_abs(b);
}

bool weyl_equivalent_typeD(const InfCharVector& a, const InfCharVector& b) {
    require_same_length(a, b);
    if (sorted_abs(a) != sorted_abs(b)) return false;
    const bool has_zero = std::any_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
    if (has_zero) return true;
    // Matching entries of equal absolute value, the number of flips has the parity of
    // the total count of negative entries, independent of the matching chosen.
    return (negative_count(a) + negative_count(b)) % 2 == 0;
}

bool weyl_equivalent_for_group(int n, const InfCharVector& a, const InfCharVector& b) {
    return n % 2 == 0 ? weyl_equivalent_typeD(a, b) : weyl_equivalent_typeB(a, b);
}

int normalize_degree(int n, int i) {
    if (i < 0 || i > n) {
        throw DomainError("normalize_degree: requires 0 <= i <= n (got n = " + std::to_string(n) +
                          ", i = " + std::to_string(i) + ")");
    }
    return std::min(i, n - i);
}

CompositionSeries composition_series_at_rho(int n, int i, Sign delta) {
    require_half_range(n, i, "composition_series_at_rho");
    // 0 -> Pi_{i,delta} -> I_delta(i,i) -> Pi_{i+1,-delta} -> 0, split when n = 2i.
    return CompositionSeries{n == 2 * i, canonical_irrep(n, i, delta), canonical_irrep(n, i + 1, -delta)};
}

}  // namespace sbc
