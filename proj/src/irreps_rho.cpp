#include "sbc/irreps_rho.hpp"

namespace sbc {

namespace {

void require_group(int n, const char* op) {
    if (n < 0) throw DomainError(std::string(op) + ": requires n >= 0 (got n = " + std::to_string(n) + ")");
}

void require_ell(int n, int ell, int hi, const char* op, const char* range) {
    if (ell < 0 || ell > hi) {
        throw DomainError(std::string(op) + ": requires " + range + " (got n = " + std::to_string(n) +
                          ", index = " + std::to_string(ell) + ")");
    }
}

}  // namespace

bool IrrepRho::is_canonical() const {
    if (n < 0 || ell < 0 || 2 * ell > n + 1) return false;
    return !is_sign_identified() || sign == Sign::plus;
}

std::string_view to_string(ReducedClassification c) {
    switch (c) {
        case ReducedClassification::finite_dimensional: return "finite-dimensional";
        case ReducedClassification::discrete_series: return "discrete-series";
        case ReducedClassification::tempered_principal: return "tempered-principal";
        case ReducedClassification::nontempered_unitary: return "nontempered-unitary";
    }
    return "?";
}

std::string to_string(const ThetaParam& t) {
    std::string out = "(";
    for (std::size_t k = 0; k < t.head.size(); ++k) {
        if (k) out += ", ";
        out += to_string(t.head[k]);
    }
    out += t.head.empty() ? "|| " : " || ";
    out += "chi^{";
    out += to_string(t.tail.sign);
    out += "}_{" + std::to_string(t.tail.k) + ",1})";
    return out;
}

std::string to_string(const IrrepRho& r) {
    std::string out = "Pi_{" + std::to_string(r.ell) + ",";
    out += to_string(r.sign);
    out += "} of " + to_string(r.group());
    return out;
}

IrrepRho canonical_irrep(int n, int ell, Sign delta) {
    require_group(n, "canonical_irrep");
    require_ell(n, ell, n + 1, "canonical_irrep", "0 <= ell <= n+1");
    if (2 * ell > n + 1) {
        ell = n + 1 - ell;
        delta = -delta;
    }
    if (n + 1 == 2 * ell) delta = Sign::plus;
    return IrrepRho{n, ell, delta};
}

IrrepRho flat_sharp(int n, int i, Sign delta, SubquotientMarker marker) {
    require_group(n, "flat_sharp");
    require_ell(n, i, n, "flat_sharp", "0 <= i <= n");
    if (marker == SubquotientMarker::flat) return canonical_irrep(n, i, delta);
    return canonical_irrep(n, i + 1, -delta);
}

namespace detail {

std::vector<IrrepRho> irreps_with_rho_unchecked(int n) {
    require_group(n, "irreps_with_rho");
    std::vector<IrrepRho> out;
    for (int ell = 0; 2 * ell <= n; ++ell) {
        out.push_back({n, ell, Sign::plus});
        out.push_back({n, ell, Sign::minus});
    }
    if (n % 2 == 1) out.push_back({n, (n + 1) / 2, Sign::plus});
    return out;
}

void require_canonical(const IrrepRho& r, const char* op) {
    if (!r.is_canonical()) {
        throw DomainError(std::string(op) + ": requires a canonical representation (0 <= ell <= floor((n+1)/2), "
                          "sign + at n+1 = 2*ell), got n = " + std::to_string(r.n) + ", ell = " +
                          std::to_string(r.ell) + ", sign " + std::string(to_string(r.sign)));
    }
}

}  // namespace detail

std::vector<IrrepRho> irreps_with_rho(int n) {
    if (n < 1) throw DomainError("irreps_with_rho: requires n >= 1 (got n = " + std::to_string(n) + ")");
    return detail::irreps_with_rho_unchecked(n);
}

ReducedClassification classify_irrep(const IrrepRho& r) {
    detail::require_canonical(r, "classify_irrep");
    if (r.ell == 0) return ReducedClassification::finite_dimensional;
    if (r.n % 2 == 1 && 2 * r.ell == r.n + 1) return ReducedClassification::discrete_series;
    if (r.n % 2 == 0 && 2 * r.ell == r.n) return ReducedClassification::tempered_principal;
    return ReducedClassification::nontempered_unitary;
}

bool central_character_nontrivial(const IrrepRho& r) {
    detail::require_canonical(r, "central_character_nontrivial");
    // The center of SO(n+1,1) is trivial for n odd.
    if (r.n % 2 == 1) return false;
    return r.sign == sign_pow(r.ell + 1);
}

std::vector<GroupDescriptor> aq_levi(int n, int i) {
    require_group(n, "aq_levi");
    require_ell(n, i, (n + 1) / 2, "aq_levi", "0 <= i <= floor((n+1)/2)");
    std::vector<GroupDescriptor> factors(static_cast<std::size_t>(i), GroupDescriptor{2, 0});
    factors.push_back(GroupDescriptor{n + 1 - 2 * i, 1});
    return factors;
}

std::vector<Rational> rho_i_vector(int n, int i) {
    require_group(n, "rho_i_vector");
    require_ell(n, i, (n + 1) / 2, "rho_i_vector", "0 <= i <= floor((n+1)/2)");
    const int rank = (n + 2) / 2;
    std::vector<Rational> out(static_cast<std::size_t>(rank), Rational{0});
    for (int t = 0; t < i; ++t) out[static_cast<std::size_t>(t)] = Rational{n, 2} - t;
    return out;
}

ThetaParam theta_stable_parameter(const IrrepRho& r) {
    detail::require_canonical(r, "theta_stable_parameter");
    ThetaParam t;
    for (int s = 0; s < r.ell; ++s) t.head.push_back(Rational{r.n, 2} - s);
    t.tail = LeviCharacter{r.n + 1 - 2 * r.ell, r.sign};
    return t;
}

}  // namespace sbc
