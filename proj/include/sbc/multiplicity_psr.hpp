#pragma once

// dim Hom_{SO(n,1)}(I_delta(i,lambda)|, J_epsilon(j,nu)) for n >= 3,
// 0 <= i <= floor(n/2), 0 <= j <= floor((n-1)/2).
//
// The answer is piecewise in (lambda, nu, delta*epsilon) with a generic value and a
// special value on a set of integer triples. Sub-cases are labelled by
// (offset class)(position of i):
//
//   (1) j = i      (a) i = 0   (b) 1 <= i < n/2 - 1   (c) i = n/2 - 1, n even   (d) i = (n-1)/2, n odd
//   (2) j = i - 1  (a) 1 <= i < (n-1)/2   (b) i = (n-1)/2, n odd   (c) i = n/2, n even
//   (3) j = i - 2  (a) 2 <= i < n/2       (b) i = n/2, n even
//   (4) j = i + 1  (a) i = 0   (b) 1 <= i < (n-3)/2   (c) i = (n-3)/2, n odd, i >= 1
//   (5) any other j: identically zero

#include "sbc/core_params.hpp"
#include "sbc/principal_series.hpp"

#include <set>
#include <span>
#include <string>

namespace sbc {

/// A triple (lambda, nu, gamma) tested against the special sets.
struct LatticePoint {
    ScalarParam lambda;
    ScalarParam nu;
    Sign gamma = Sign::plus;
};

struct MultiplicityResult {
    int value = 0;
    std::string case_label;

    friend bool operator==(const MultiplicityResult&, const MultiplicityResult&) = default;
};

/// L = {(-i, -j, (-1)^(i+j)) : 0 <= j <= i}.
bool in_L(const LatticePoint& p);
/// L' = {p in L : nu != 0}.
bool in_Lprime(const LatticePoint& p);

/// lambda in -N, read with 0 in N.
bool in_negative_naturals(const ScalarParam& lambda);

MultiplicityResult psr_multiplicity(int n, int i, const ScalarParam& lambda, Sign delta, int j, const ScalarParam& nu,
                                    Sign epsilon);

/// Same query phrased with descriptors: big on SO(n+1,1), small on SO(n,1) (small.n == big.n - 1).
/// Degrees are normalized with i ~ n - i first; half-spin summands are rejected.
MultiplicityResult psr_multiplicity(const PsrDescriptor& big, const PsrDescriptor& small);

std::set<int> multiplicity_support(int n, int i, int j);

/// Every sub-case label of the table, in dispatch order.
std::span<const std::string_view> multiplicity_case_labels();

/// Labels of the rows whose (n, i, j) guard holds; exactly one for every valid input.
std::vector<std::string_view> matching_cases(int n, int i, int j);

}  // namespace sbc
