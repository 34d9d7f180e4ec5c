#include "sbc/gross_prasad.hpp"

#include "sbc/branching_rho.hpp"

#include <algorithm>

namespace sbc {

namespace {

constexpr int kMaxRank = 62;

void require_rank(int m, const char* op) {
    if (m < 1 || m > kMaxRank) {
        throw DomainError(std::string(op) + ": requires 1 <= m <= " + std::to_string(kMaxRank) + " (got m = " +
                          std::to_string(m) + ")");
    }
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t c = 1;
    // c * (n - t) is divisible by (t + 1) at each step; n <= 62 keeps it in range.
    for (int t = 0; t < k; ++t) c = c * static_cast<std::uint64_t>(n - t) / static_cast<std::uint64_t>(t + 1);
    return c;
}

// (top, top-1, ..., top-len+1)
std::vector<Rational> descending(Rational top, int len) {
    std::vector<Rational> out;
    for (int t = 0; t < len; ++t) out.push_back(top - t);
    return out;
}

int count_below(const std::vector<Rational>& coeffs, const Rational& threshold) {
    return static_cast<int>(std::count_if(coeffs.begin(), coeffs.end(), [&](const Rational& c) { return c < threshold; }));
}

int count_above(const std::vector<Rational>& coeffs, const Rational& threshold) {
    return static_cast<int>(std::count_if(coeffs.begin(), coeffs.end(), [&](const Rational& c) { return c > threshold; }));
}

}  // namespace

std::string_view to_string(PacketKind k) { return k == PacketKind::ds_odd ? "ds-odd" : "tempered-even"; }
std::string_view to_string(Conjecture c) { return c == Conjecture::I ? "I" : "II"; }
std::string_view to_string(Profile p) { return p == Profile::literal ? "literal" : "calibrated"; }

PacketKind parse_packet_kind(std::string_view text) {
    if (text == "ds-odd") return PacketKind::ds_odd;
    if (text == "tempered-even") return PacketKind::tempered_even;
    throw ParseError("packet kind must be 'ds-odd' or 'tempered-even', got '" + std::string(text) + "'");
}

Conjecture parse_conjecture(std::string_view text) {
    if (text == "I") return Conjecture::I;
    if (text == "II") return Conjecture::II;
    throw ParseError("conjecture must be 'I' or 'II', got '" + std::string(text) + "'");
}

Profile parse_profile(std::string_view text) {
    if (text == "literal") return Profile::literal;
    if (text == "calibrated") return Profile::calibrated;
    throw ParseError("profile must be 'literal' or 'calibrated', got '" + std::string(text) + "'");
}

std::uint64_t VoganPacket::total() const {
    std::uint64_t t = 0;
    for (const auto& mem : members) t += mem.count;
    return t;
}

VoganPacket vogan_packet(PacketKind kind, int m) {
    require_rank(m, "vogan_packet");
    VoganPacket packet{kind, m, {}, m};
    if (kind == PacketKind::ds_odd) {
        // Discrete series of the pure forms SO(l, 2m+1-l), l even.
        for (int l = 0; l <= 2 * m; l += 2) packet.members.push_back({GroupDescriptor{l, 2 * m + 1 - l}, binomial(m, l / 2)});
    } else {
        // Pure forms SO(l, 2m+2-l), l odd; the form SO(2m-2p+1, 2p+1) contributes one member
        // per discrete series of its Levi factor SO(2m-2p, 2p) with matching central character.
        for (int l = 1; l <= 2 * m + 1; l += 2) packet.members.push_back({GroupDescriptor{l, 2 * m + 2 - l}, binomial(m, (l - 1) / 2)});
    }
    return packet;
}

LanglandsCoefficients langlands_coefficients(Conjecture c, int m) {
    require_rank(m, "langlands_coefficients");
    const Rational half{1, 2};
    if (c == Conjecture::I) return {descending(Rational{m}, m + 1), descending(Rational{m} - half, m)};
    return {descending(Rational{m} - half, m), descending(Rational{m - 1}, m)};
}

std::pair<SignVector, SignVector> gp_characters(Conjecture c, int m) {
    const auto coeffs = langlands_coefficients(c, m);
    const Rational half{1, 2};
    SignVector first;
    SignVector second;
    if (c == Conjecture::I) {
        // chi_1(delta_i): #{j : m-i+1 > f_j};  chi_2(eps_j): #{i : m-j+1/2 < e_i}.
        for (int i = 1; i <= m; ++i) first.push_back(sign_pow(count_below(coeffs.second, Rational{m - i + 1})));
        for (int j = 1; j <= m; ++j) second.push_back(sign_pow(count_above(coeffs.first, Rational{m - j} + half)));
    } else {
        // chi_2(eps_j): #{k : m-j+1/2 < g_k};  chi_3(gamma_k): #{j : m-k > f_j}, k < m.
        for (int j = 1; j <= m; ++j) first.push_back(sign_pow(count_above(coeffs.second, Rational{m - j} + half)));
        for (int k = 1; k <= m - 1; ++k) second.push_back(sign_pow(count_below(coeffs.first, Rational{m - k})));
    }
    return {first, second};
}

ExponentRules exponent_rules(Conjecture c, Profile profile) {
    if (c == Conjecture::I) return {{false, 0}, {true, 0}};
    if (profile == Profile::literal) return {{false, 0}, {true, 0}};
    // The unique choice among (+-m, offset 0/1) reproducing the expected (p, q) for every m.
    return {{true, 1}, {false, 1}};
}

std::pair<int, int> expected_pq(Conjecture c, int m) {
    require_rank(m, "expected_pq");
    const bool even = m % 2 == 0;
    if (c == Conjecture::I) return even ? std::pair{0, m} : std::pair{m, 0};
    return even ? std::pair{m, 0} : std::pair{0, m - 1};
}

std::pair<int, int> count_pq(const SignVector& chi_first, const SignVector& chi_second, int m,
                             const ExponentRules& rules) {
    int p = 0;
    int q = 0;
    for (std::size_t a = 0; a < chi_first.size(); ++a) {
        if (chi_first[a] == rules.p.target(m, static_cast<int>(a) + 1)) ++p;
    }
    for (std::size_t b = 0; b < chi_second.size(); ++b) {
        if (chi_second[b] == rules.q.target(m, static_cast<int>(b) + 1)) ++q;
    }
    return {p, q};
}

std::pair<GroupDescriptor, GroupDescriptor> pure_forms(Conjecture c, int m, int p, int q) {
    const bool even = m % 2 == 0;
    if (c == Conjecture::I) {
        if (even) return {GroupDescriptor{2 * m - 2 * p + 1, 2 * p + 1}, GroupDescriptor{2 * q, 2 * m - 2 * q + 1}};
        return {GroupDescriptor{2 * p + 1, 2 * m - 2 * p + 1}, GroupDescriptor{2 * m - 2 * q, 2 * q + 1}};
    }
    if (even) return {GroupDescriptor{2 * m - 2 * p + 1, 2 * p}, GroupDescriptor{2 * q + 1, 2 * m - 2 * q - 1}};
    return {GroupDescriptor{2 * p + 1, 2 * m - 2 * p}, GroupDescriptor{2 * m - 2 * q - 1, 2 * q + 1}};
}

GpResolution gp_resolve(Conjecture c, int m, Profile profile) {
    require_rank(m, "gp_resolve");
    auto [chi_first, chi_second] = gp_characters(c, m);
    const auto [p, q] = count_pq(chi_first, chi_second, m, exponent_rules(c, profile));
    GpResolution r{c, m, std::move(chi_first), std::move(chi_second), p, q, pure_forms(c, m, p, q), profile, std::nullopt};
    const auto expected = expected_pq(c, m);
    if (expected != std::pair{p, q}) {
        r.warning = "exponents of the " + std::string(to_string(profile)) + " profile give (p,q)=(" + std::to_string(p) +
                    "," + std::to_string(q) + "); expected (" + std::to_string(expected.first) + "," +
                    std::to_string(expected.second) + ")";
    }
    return r;
}

std::optional<int> rank_one_pair(const std::pair<GroupDescriptor, GroupDescriptor>& forms) {
    const auto& [a, b] = forms;
    if (std::min(a.p, a.q) != 1 || std::min(b.p, b.q) != 1) return std::nullopt;
    if (a.dimension_of_form() != b.dimension_of_form() + 1) return std::nullopt;
    return a.dimension_of_form() - 2;
}

DistinguishedPair gp_distinguished_pair(Conjecture c, int m, Profile profile) {
    GpResolution resolution = gp_resolve(c, m, profile);
    IrrepRho big;
    IrrepRho small;
    if (c == Conjecture::I) {
        big = canonical_irrep(2 * m, m, sign_pow(m + 1));
        small = canonical_irrep(2 * m - 1, m, Sign::plus);
    } else {
        big = canonical_irrep(2 * m - 1, m, Sign::plus);
        small = canonical_irrep(2 * m - 2, m - 1, sign_pow(m));
    }
    const int dim = hom_dim(big, small);
    return DistinguishedPair{std::move(resolution), big, small, dim};
}

std::string to_string(const SignVector& v) {
    std::string out = "(";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) out += ",";
        out += to_string(v[k]);
    }
    return out + ")";
}

}  // namespace sbc
