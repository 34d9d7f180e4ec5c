#pragma once

// Principal series I_delta(i, lambda) of SO(n+1,1) induced from
// Lambda^i(C^n) (x) delta (x) e^lambda on the maximal parabolic P = MAN.

#include "sbc/core_params.hpp"
#include "sbc/irreps_rho.hpp"

#include <optional>
#include <vector>

namespace sbc {

/// Which irreducible summand of Lambda^{n/2}(C^n), when n = 2*degree.
enum class HalfSpin { none, plus, minus };

struct PsrDescriptor {
    int n = 1;
    int degree = 0;
    Sign sign = Sign::plus;
    ScalarParam scalar;
    HalfSpin half_spin = HalfSpin::none;

    /// Validates 0 <= degree <= n and that half_spin is set only when n = 2*degree.
    static PsrDescriptor make(int n, int degree, Sign sign, ScalarParam scalar, HalfSpin half_spin = HalfSpin::none);

    /// The same representation with degree replaced by min(degree, n - degree).
    PsrDescriptor normalized() const;

    friend bool operator==(const PsrDescriptor&, const PsrDescriptor&) = default;
};

/// Exact real coordinates on the Cartan of so(n+2, C); length floor(n/2) + 1.
using InfCharVector = std::vector<Rational>;

/// Constituents of I_delta(i, i). Non-split: (sub, quotient). Split (n = 2i): two summands.
struct CompositionSeries {
    bool split = false;
    IrrepRho first;
    IrrepRho second;

    friend bool operator==(const CompositionSeries&, const CompositionSeries&) = default;
};

InfCharVector rho_vector(int n);

/// Drops n/2 - i from rho and appends lambda - n/2. lambda must be an exact real.
InfCharVector infinitesimal_character(int n, int i, const ScalarParam& lambda);

bool has_rho_infchar(int n, int i, const ScalarParam& lambda);

/// Weyl group of so(2r): permutations with an even number of sign changes.
/// A zero coordinate lets any number of sign changes through.
bool weyl_equivalent_typeD(const InfCharVector& a, const InfCharVector& b);
/// Weyl group of so(2r+1): permutations with arbitrary sign changes.
bool weyl_equivalent_typeB(const InfCharVector& a, const InfCharVector& b);
/// Uses the Weyl group of so(n+2, C): type D for n even, type B for n odd.
bool weyl_equivalent_for_group(int n, const InfCharVector& a, const InfCharVector& b);

int normalize_degree(int n, int i);

CompositionSeries composition_series_at_rho(int n, int i, Sign delta);

}  // namespace sbc
