#pragma once

// Symmetry breaking between the rho-infinitesimal-character irreducibles of
// G = SO(n+1,1) and G' = SO(n,1): dim Hom_{G'}(Pi_{i,delta}|, pi_{j,eps}) is 1 exactly
// when the (identified) signs agree and j is i or i-1, and 0 otherwise.

#include "sbc/irreps_rho.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sbc {

struct BranchingGraph {
    int n = 1;
    std::vector<IrrepRho> nodes_big;    // on SO(n+1,1)
    std::vector<IrrepRho> nodes_small;  // on SO(n,1), i.e. rank parameter n-1
    std::vector<std::pair<IrrepRho, IrrepRho>> edges;
};

struct ThetaArrow {
    ThetaParam big;
    ThetaParam small;
    bool vertical = true;  // j = i; otherwise the slanted arrow j = i-1
};

/// 0 <= i <= floor((n+1)/2), 0 <= j <= floor(n/2), n >= 1.
int hom_dim(int n, int i, Sign delta, int j, Sign epsilon);

/// Any Pi of SO(n+1,1) and pi of SO(n,1) (small.n == big.n - 1), canonicalized first.
int hom_dim(const IrrepRho& big, const IrrepRho& small);

BranchingGraph branching_graph(int n);

std::optional<ThetaArrow> theta_arrow(int n, int i, Sign delta, int j, Sign epsilon);

/// "A => B".
std::string to_string(const ThetaArrow& a);

/// DOT node id: "Pi_<ell><sign>" on the big side, "pi_<j><sign>" on the small side;
/// sign-identified nodes drop the sign.
std::string node_id(const IrrepRho& r, bool big_side);

/// `digraph branching_<n> { ... }` with quoted ids, all nodes declared, one edge per arrow.
std::string to_dot(const BranchingGraph& g);

}  // namespace sbc
