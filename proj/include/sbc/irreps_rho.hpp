#pragma once

// Irreducible representations of SO(n+1,1) with infinitesimal character rho.
//
// Pi_{ell,delta} (0 <= ell <= n+1) is the flat subquotient of I_delta(ell, ell).
// Pi_{ell,delta} ~ Pi_{n+1-ell,-delta}, so every class has a representative with
// ell <= floor((n+1)/2); at the middle degree n+1 = 2*ell both signs give the same
// representation and the canonical sign is +. The subgroup SO(n,1) uses the same
// type with n-1 in place of n, which is why n = 0 (the group SO(1,1)) is accepted.

#include "sbc/core_params.hpp"

#include <compare>
#include <string>
#include <vector>

namespace sbc {

struct IrrepRho {
    int n = 1;
    int ell = 0;
    Sign sign = Sign::plus;

    /// The group SO(n+1,1) this representation lives on.
    GroupDescriptor group() const { return {n + 1, 1}; }
    bool is_canonical() const;
    /// n+1 = 2*ell: the sign carries no information.
    bool is_sign_identified() const { return n + 1 == 2 * ell; }

    friend auto operator<=>(const IrrepRho&, const IrrepRho&) = default;
};

enum class SubquotientMarker { flat, sharp };

enum class ReducedClassification { finite_dimensional, discrete_series, tempered_principal, nontempered_unitary };

std::string_view to_string(ReducedClassification c);

/// chi^sign_{k,1}, a character of SO(k,1) with vanishing differential. For k = 0
/// the group is trivial and both signs denote the same character.
struct LeviCharacter {
    int k = 0;
    Sign sign = Sign::plus;

    friend bool operator==(const LeviCharacter& a, const LeviCharacter& b) {
        return a.k == b.k && (a.k == 0 || a.sign == b.sign);
    }
};

/// (head || chi^sign_{k,1}); head entries decrease by exactly one.
struct ThetaParam {
    std::vector<Rational> head;
    LeviCharacter tail;

    friend bool operator==(const ThetaParam&, const ThetaParam&) = default;
};

/// "(a_1, ..., a_l || chi^{s}_{k,1})".
std::string to_string(const ThetaParam& t);
std::string to_string(const IrrepRho& r);

IrrepRho canonical_irrep(int n, int ell, Sign delta);
IrrepRho flat_sharp(int n, int i, Sign delta, SubquotientMarker marker);

/// Canonical representatives, ordered by (ell, sign) with + before -.
std::vector<IrrepRho> irreps_with_rho(int n);

ReducedClassification classify_irrep(const IrrepRho& r);
bool central_character_nontrivial(const IrrepRho& r);

/// Levi of the theta-stable parabolic q_i: SO(2)^i x SO(n+1-2i, 1).
std::vector<GroupDescriptor> aq_levi(int n, int i);

/// Half the sum of the roots in the nilradical of q_i, in the coordinates of the
/// fundamental Cartan (length = rank of so(n+2, C)).
std::vector<Rational> rho_i_vector(int n, int i);

ThetaParam theta_stable_parameter(const IrrepRho& r);

namespace detail {
// n >= 0 variant used for the subgroup side.
std::vector<IrrepRho> irreps_with_rho_unchecked(int n);
void require_canonical(const IrrepRho& r, const char* op);
}  // namespace detail

}  // namespace sbc
