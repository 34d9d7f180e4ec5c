#pragma once

// Vogan packets over pure inner forms and the character-counting recipe that
// picks the distinguished pure inner form pair for the tempered rho-packets of
//   I : SO(2m+1,1) x SO(2m,1)    (Pi_{m,(-1)^(m+1)} restricted to pi_m)
//   II: SO(2m,1) x SO(2m-1,1)    (pi_m restricted to varpi_{m-1,(-1)^m})

#include "sbc/core_params.hpp"
#include "sbc/irreps_rho.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sbc {

enum class PacketKind { ds_odd, tempered_even };
enum class Conjecture { I, II };
enum class Profile { literal, calibrated };

std::string_view to_string(PacketKind k);
std::string_view to_string(Conjecture c);
std::string_view to_string(Profile p);
PacketKind parse_packet_kind(std::string_view text);
Conjecture parse_conjecture(std::string_view text);
Profile parse_profile(std::string_view text);

struct PacketMember {
    GroupDescriptor form;
    std::uint64_t count = 0;
};

struct VoganPacket {
    PacketKind kind = PacketKind::ds_odd;
    int m = 1;
    std::vector<PacketMember> members;
    int character_group_rank = 0;

    std::uint64_t total() const;
};

/// Values of a character of (Z/2)^rank on the standard generators.
using SignVector = std::vector<Sign>;

struct LanglandsCoefficients {
    std::vector<Rational> first;
    std::vector<Rational> second;
};

/// Target sign (-1)^(index + [m] + offset) that a character value is matched against
/// when counting p or q.
struct ExponentRule {
    bool with_m = false;
    int offset = 0;

    Sign target(int m, int index) const { return sign_pow(index + (with_m ? m : 0) + offset); }

    friend bool operator==(const ExponentRule&, const ExponentRule&) = default;
};

struct ExponentRules {
    ExponentRule p;
    ExponentRule q;
};

struct GpResolution {
    Conjecture conjecture = Conjecture::I;
    int m = 1;
    SignVector chi_first;
    SignVector chi_second;
    int p = 0;
    int q = 0;
    std::pair<GroupDescriptor, GroupDescriptor> forms;
    Profile profile = Profile::literal;
    std::optional<std::string> warning;

    friend bool operator==(const GpResolution&, const GpResolution&) = default;
};

struct DistinguishedPair {
    GpResolution resolution;
    IrrepRho big;
    IrrepRho small;
    int hom_dim = 0;
};

/// m in [1, 62] so that 2^m fits in the counters.
VoganPacket vogan_packet(PacketKind kind, int m);

LanglandsCoefficients langlands_coefficients(Conjecture c, int m);

/// chi values: a generator with threshold t gets (-1)^#{coefficients of the other list on
/// the counted side of t}; strict comparisons throughout.
std::pair<SignVector, SignVector> gp_characters(Conjecture c, int m);

/// The matching exponents used for (p, q) by a profile.
ExponentRules exponent_rules(Conjecture c, Profile profile);

/// (p, q) the recipe is expected to land on.
std::pair<int, int> expected_pq(Conjecture c, int m);

/// Counts p and q from chi and a pair of exponent rules.
std::pair<int, int> count_pq(const SignVector& chi_first, const SignVector& chi_second, int m,
                             const ExponentRules& rules);

/// Pure inner form pair selected by (p, q), with signatures in the order the parity-split
/// formulas produce them.
std::pair<GroupDescriptor, GroupDescriptor> pure_forms(Conjecture c, int m, int p, int q);

GpResolution gp_resolve(Conjecture c, int m, Profile profile);

/// The n of SO(n+1,1) x SO(n,1) when both forms are rank one (either signature order).
std::optional<int> rank_one_pair(const std::pair<GroupDescriptor, GroupDescriptor>& forms);

DistinguishedPair gp_distinguished_pair(Conjecture c, int m, Profile profile);

std::string to_string(const SignVector& v);

}  // namespace sbc
