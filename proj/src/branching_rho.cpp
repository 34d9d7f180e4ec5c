#include "sbc/branching_rho.hpp"

namespace sbc {

namespace {

void require_branching_range(int n, int i, int j) {
    if (n < 1) throw DomainError("hom_dim: requires n >= 1 (got n = " + std::to_string(n) + ")");
    if (i < 0 || 2 * i > n + 1) {
        throw DomainError("hom_dim: requires 0 <= i <= floor((n+1)/2) (got n = " + std::to_string(n) +
                          ", i = " + std::to_string(i) + ")");
    }
    if (j < 0 || 2 * j > n) {
        throw DomainError("hom_dim: requires 0 <= j <= floor(n/2) (got n = " + std::to_string(n) +
                          ", j = " + std::to_string(j) + ")");
    }
}

// Both arguments canonical.
int hom_dim_canonical(const IrrepRho& big, const IrrepRho& small) {
    const bool signs_match = big.sign == small.sign || big.is_sign_identified() || small.is_sign_identified();
    const bool adjacent = small.ell == big.ell || small.ell == big.ell - 1;
    return signs_match && adjacent ? 1 : 0;
}

}  // namespace

int hom_dim(int n, int i, Sign delta, int j, Sign epsilon) {
    require_branching_range(n, i, j);
    return hom_dim_canonical(canonical_irrep(n, i, delta), canonical_irrep(n - 1, j, epsilon));
}

int hom_dim(const IrrepRho& big, const IrrepRho& small) {
    if (small.n != big.n - 1) {
        throw DomainError("hom_dim: the subgroup representation must live on SO(n,1) with n = " +
                          std::to_string(big.n));
    }
    return hom_dim_canonical(canonical_irrep(big.n, big.ell, big.sign),
                             canonical_irrep(small.n, small.ell, small.sign));
}

BranchingGraph branching_graph(int n) {
    if (n < 1) throw DomainError("branching_graph: requires n >= 1 (got n = " + std::to_string(n) + ")");
    BranchingGraph g;
    g.n = n;
    g.nodes_big = irreps_with_rho(n);
    g.nodes_small = detail::irreps_with_rho_unchecked(n - 1);
    for (const auto& big : g.nodes_big) {
        for (const auto& small : g.nodes_small) {
            if (hom_dim_canonical(big, small) == 1) g.edges.emplace_back(big, small);
        }
    }
    return g;
}

std::optional<ThetaArrow> theta_arrow(int n, int i, Sign delta, int j, Sign epsilon) {
    if (hom_dim(n, i, delta, j, epsilon) == 0) return std::nullopt;
    const IrrepRho big = canonical_irrep(n, i, delta);
    const IrrepRho small = canonical_irrep(n - 1, j, epsilon);
    return ThetaArrow{theta_stable_parameter(big), theta_stable_parameter(small), big.ell == small.ell};
}

std::string to_string(const ThetaArrow& a) { return to_string(a.big) + " => " + to_string(a.small); }

std::string node_id(const IrrepRho& r, bool big_side) {
    std::string id = (big_side ? "Pi_" : "pi_") + std::to_string(r.ell);
    if (!r.is_sign_identified()) id += to_string(r.sign);
    return id;
}

std::string to_dot(const BranchingGraph& g) {
    std::string out = "digraph branching_" + std::to_string(g.n) + " {\n";
    for (const auto& r : g.nodes_big) out += "  \"" + node_id(r, true) + "\";\n";
    for (const auto& r : g.nodes_small) out += "  \"" + node_id(r, false) + "\";\n";
    for (const auto& [big, small] : g.edges) {
        out += "  \"" + node_id(big, true) + "\" -> \"" + node_id(small, false) + "\";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace sbc
