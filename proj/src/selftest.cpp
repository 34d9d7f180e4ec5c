#include "sbc/cli.hpp"
#include "sbc/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>

#ifndef SBC_DEFAULT_VECTORS
#define SBC_DEFAULT_VECTORS "data/golden_vectors.jsonl"
#endif

namespace sbc::cli {

namespace {

struct GoldenVector {
    std::size_t line = 0;
    std::string criterion;
    std::string op;
    Json input;
    Json expect;
    std::string tag;
};

ScalarParam scalar_at(const Json& in, const char* key) { return in.at(key).get<ScalarParam>(); }
Sign sign_at(const Json& in, const char* key) { return in.at(key).get<Sign>(); }
int int_at(const Json& in, const char* key) { return in.at(key).get<int>(); }

IrrepRho irrep_at(const Json& in) { return IrrepRho{int_at(in, "n"), int_at(in, "ell"), sign_at(in, "sign")}; }

using OpFn = std::function<Json(const Json&)>;

const std::map<std::string, OpFn, std::less<>>& op_table() {
    static const std::map<std::string, OpFn, std::less<>> table{
        {"scalar_is_integer", [](const Json& in) { return Json(scalar_is_integer(scalar_at(in, "s"))); }},
        {"scalar_equals_integer",
         [](const Json& in) { return Json(scalar_equals_integer(scalar_at(in, "s"), in.at("k").get<std::int64_t>())); }},
        {"scalar_roundtrip", [](const Json& in) { return Json(to_string(parse_scalar(in.at("s").get<std::string>()))); }},
        {"infinitesimal_character",
         [](const Json& in) { return Json(infinitesimal_character(int_at(in, "n"), int_at(in, "i"), scalar_at(in, "lambda"))); }},
        {"rho_vector", [](const Json& in) { return Json(rho_vector(int_at(in, "n"))); }},
        {"has_rho_infchar",
         [](const Json& in) { return Json(has_rho_infchar(int_at(in, "n"), int_at(in, "i"), scalar_at(in, "lambda"))); }},
        {"weyl_equivalent_typeD",
         [](const Json& in) {
             return Json(weyl_equivalent_typeD(in.at("a").get<InfCharVector>(), in.at("b").get<InfCharVector>()));
         }},
        {"normalize_degree", [](const Json& in) { return Json(normalize_degree(int_at(in, "n"), int_at(in, "i"))); }},
        {"composition_series_at_rho",
         [](const Json& in) {
             return Json(composition_series_at_rho(int_at(in, "n"), int_at(in, "i"), sign_at(in, "delta")));
         }},
        {"in_L",
         [](const Json& in) { return Json(in_L({scalar_at(in, "lambda"), scalar_at(in, "nu"), sign_at(in, "gamma")})); }},
        {"in_Lprime",
         [](const Json& in) {
             return Json(in_Lprime({scalar_at(in, "lambda"), scalar_at(in, "nu"), sign_at(in, "gamma")}));
         }},
        {"psr_multiplicity",
         [](const Json& in) {
             return Json(psr_multiplicity(int_at(in, "n"), int_at(in, "i"), scalar_at(in, "lambda"), sign_at(in, "delta"),
                                          int_at(in, "j"), scalar_at(in, "nu"), sign_at(in, "epsilon")));
         }},
        {"multiplicity_support",
         [](const Json& in) { return Json(multiplicity_support(int_at(in, "n"), int_at(in, "i"), int_at(in, "j"))); }},
        {"canonical_irrep",
         [](const Json& in) { return Json(canonical_irrep(int_at(in, "n"), int_at(in, "ell"), sign_at(in, "delta"))); }},
        {"flat_sharp",
         [](const Json& in) {
             const auto marker = in.at("marker").get<std::string>() == "sharp" ? SubquotientMarker::sharp
                                                                               : SubquotientMarker::flat;
             return Json(flat_sharp(int_at(in, "n"), int_at(in, "i"), sign_at(in, "delta"), marker));
         }},
        {"irreps_with_rho", [](const Json& in) { return Json(irreps_with_rho(int_at(in, "n"))); }},
        {"classify_irrep", [](const Json& in) { return Json(std::string(to_string(classify_irrep(irrep_at(in))))); }},
        {"central_character_nontrivial",
         [](const Json& in) { return Json(central_character_nontrivial(irrep_at(in))); }},
        {"aq_levi", [](const Json& in) { return Json(aq_levi(int_at(in, "n"), int_at(in, "i"))); }},
        {"rho_i_vector", [](const Json& in) { return Json(rho_i_vector(int_at(in, "n"), int_at(in, "i"))); }},
        {"theta_stable_parameter", [](const Json& in) { return Json(theta_stable_parameter(irrep_at(in))); }},
        {"hom_dim",
         [](const Json& in) {
             return Json(hom_dim(int_at(in, "n"), int_at(in, "i"), sign_at(in, "delta"), int_at(in, "j"),
                                 sign_at(in, "epsilon")));
         }},
        {"branching_graph",
         [](const Json& in) {
             const auto g = branching_graph(int_at(in, "n"));
             return Json{{"big", g.nodes_big.size()}, {"small", g.nodes_small.size()}, {"edges", g.edges.size()}};
         }},
        {"theta_arrow",
         [](const Json& in) {
             const auto a = theta_arrow(int_at(in, "n"), int_at(in, "i"), sign_at(in, "delta"), int_at(in, "j"),
                                        sign_at(in, "epsilon"));
             if (!a) return Json(nullptr);
             return Json{{"big", a->big}, {"small", a->small}, {"vertical", a->vertical}};
         }},
        {"vogan_packet",
         [](const Json& in) {
             return Json(vogan_packet(parse_packet_kind(in.at("kind").get<std::string>()), int_at(in, "m")));
         }},
        {"langlands_coefficients",
         [](const Json& in) {
             const auto c = langlands_coefficients(parse_conjecture(in.at("conjecture").get<std::string>()), int_at(in, "m"));
             return Json{{"first", c.first}, {"second", c.second}};
         }},
        {"gp_characters",
         [](const Json& in) {
             const auto [a, b] = gp_characters(parse_conjecture(in.at("conjecture").get<std::string>()), int_at(in, "m"));
             return Json{{"chi_first", a}, {"chi_second", b}};
         }},
        {"gp_resolve",
         [](const Json& in) {
             return Json(gp_resolve(parse_conjecture(in.at("conjecture").get<std::string>()), int_at(in, "m"),
                                    parse_profile(in.at("profile").get<std::string>())));
         }},
        {"gp_distinguished_pair",
         [](const Json& in) {
             const auto d = gp_distinguished_pair(parse_conjecture(in.at("conjecture").get<std::string>()),
                                                  int_at(in, "m"), parse_profile(in.at("profile").get<std::string>()));
             return Json{{"big", d.big}, {"small", d.small}, {"hom_dim", d.hom_dim}};
         }},
    };
    return table;
}

// Objects in the expectation are matched key by key; anything else must be equal.
bool matches(const Json& expected, const Json& actual) {
    if (expected.is_object() && actual.is_object()) {
        for (const auto& [key, value] : expected.items()) {
            if (!actual.contains(key) || !matches(value, actual.at(key))) return false;
        }
        return true;
    }
    return expected == actual;
}

std::vector<GoldenVector> load_vectors(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("selftest: cannot open golden-vector file " + path.string());
    std::vector<GoldenVector> out;
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        if (text.empty() || text.front() == '#') continue;
        try {
            const Json j = Json::parse(text);
            GoldenVector v{line, j.at("criterion").get<std::string>(), j.at("op").get<std::string>(), j.at("input"),
                           j.at("expect"), j.value("tag", std::string{})};
            if (!op_table().contains(v.op)) throw std::runtime_error("unknown op '" + v.op + "'");
            out.push_back(std::move(v));
        } catch (const std::exception& e) {
            throw std::runtime_error("selftest: corrupt golden-vector file " + path.string() + " at line " +
                                     std::to_string(line) + ": " + e.what());
        }
    }
    if (out.empty()) throw std::runtime_error("selftest: golden-vector file " + path.string() + " has no vectors");
    return out;
}

std::string describe(const GoldenVector& v, const Json& actual) {
    std::string out = "line " + std::to_string(v.line) + " " + v.op;
    if (v.expect.is_object() && v.expect.contains("case")) out += " case " + v.expect.at("case").get<std::string>();
    out += " " + v.input.dump() + ": expected " + v.expect.dump() + ", got " + actual.dump();
    return out;
}

// ---- invariant sweeps -------------------------------------------------------

struct Sweep {
    std::string name;
    std::function<std::vector<std::string>()> run;  // violations
};

std::vector<ScalarParam> sweep_scalars(int n) {
    std::vector<ScalarParam> out;
    for (int v = -6; v <= n + 2; ++v) out.emplace_back(v);
    out.push_back(ScalarParam::generic());
    return out;
}

std::vector<std::string> sweep_multiplicity_table() {
    std::vector<std::string> bad;
    std::set<std::string> seen;
    for (int n = 3; n <= 10; ++n) {
        for (int i = 0; i <= n / 2; ++i) {
            for (int j = 0; j <= (n - 1) / 2; ++j) {
                if (matching_cases(n, i, j).size() != 1) {
                    bad.push_back("n=" + std::to_string(n) + " i=" + std::to_string(i) + " j=" + std::to_string(j) +
                                  ": case rows not exclusive");
                }
                const auto support = multiplicity_support(n, i, j);
                for (const auto& lam : sweep_scalars(n)) {
                    for (const auto& nu : sweep_scalars(n)) {
                        for (Sign gamma : {Sign::plus, Sign::minus}) {
                            const auto r = psr_multiplicity(n, i, lam, gamma, j, nu, Sign::plus);
                            const auto r2 = psr_multiplicity(n, i, lam, -gamma, j, nu, Sign::minus);
                            seen.insert(r.case_label);
                            if (!support.contains(r.value)) {
                                bad.push_back("value " + std::to_string(r.value) + " outside support at n=" +
                                              std::to_string(n) + " i=" + std::to_string(i) + " j=" + std::to_string(j));
                            }
                            if (r != r2) bad.push_back("sign dependence beyond delta*epsilon at n=" + std::to_string(n));
                        }
                    }
                }
            }
        }
    }
    for (auto label : multiplicity_case_labels()) {
        if (!seen.contains(std::string(label))) bad.push_back("case " + std::string(label) + " never dispatched");
    }
    return bad;
}

std::vector<std::string> sweep_multiplicity_one() {
    std::vector<std::string> bad;
    const std::vector<ScalarParam> non_integers{ScalarParam::generic(), ScalarParam{Rational{1, 2}},
                                                ScalarParam{Rational{-7, 3}}, ScalarParam{Rational{1}, Rational{1}}};
    for (int n = 3; n <= 10; ++n) {
        for (int i = 0; i <= n / 2; ++i) {
            for (int j = 0; j <= (n - 1) / 2; ++j) {
                if (n == 2 * i || n == 2 * j + 1) continue;
                for (const auto& lam : non_integers) {
                    for (const auto& nu : non_integers) {
                        for (Sign gamma : {Sign::plus, Sign::minus}) {
                            const auto r = psr_multiplicity(n, i, lam, gamma, j, nu, Sign::plus);
                            if (r.value > 1) {
                                bad.push_back("value " + std::to_string(r.value) + " at n=" + std::to_string(n) +
                                              " i=" + std::to_string(i) + " j=" + std::to_string(j));
                            }
                        }
                    }
                }
            }
        }
    }
    return bad;
}

std::vector<std::string> sweep_infchar() {
    std::vector<std::string> bad;
    for (int n = 1; n <= 12; ++n) {
        for (int i = 0; i <= n / 2; ++i) {
            for (int lam = -n; lam <= 2 * n; ++lam) {
                const bool direct = has_rho_infchar(n, i, ScalarParam{lam});
                const bool weyl = weyl_equivalent_for_group(n, infinitesimal_character(n, i, ScalarParam{lam}), rho_vector(n));
                if (direct != weyl) {
                    bad.push_back("n=" + std::to_string(n) + " i=" + std::to_string(i) + " lambda=" + std::to_string(lam));
                }
            }
        }
    }
    return bad;
}

std::vector<std::string> sweep_classification() {
    std::vector<std::string> bad;
    for (int n = 1; n <= 12; ++n) {
        const auto irreps = irreps_with_rho(n);
        if (static_cast<int>(irreps.size()) != n + 2) bad.push_back("n=" + std::to_string(n) + ": wrong count");
        int ds = 0;
        int tempered = 0;
        for (const auto& r : irreps) {
            const auto c = classify_irrep(r);
            ds += c == ReducedClassification::discrete_series;
            tempered += c == ReducedClassification::tempered_principal;
        }
        if (ds != (n % 2 == 1 ? 1 : 0) || tempered != (n % 2 == 0 ? 2 : 0)) {
            bad.push_back("n=" + std::to_string(n) + ": tempered census off");
        }
        for (int ell = 0; ell <= n + 1; ++ell) {
            for (Sign s : {Sign::plus, Sign::minus}) {
                const auto c = canonical_irrep(n, ell, s);
                if (canonical_irrep(c.n, c.ell, c.sign) != c || canonical_irrep(n, n + 1 - ell, -s) != c) {
                    bad.push_back("n=" + std::to_string(n) + " ell=" + std::to_string(ell) + ": canonical form unstable");
                }
            }
        }
    }
    return bad;
}

std::vector<std::string> sweep_branching() {
    std::vector<std::string> bad;
    for (int n = 1; n <= 12; ++n) {
        for (int i = 0; 2 * i <= n + 1; ++i) {
            for (int j = 0; 2 * j <= n; ++j) {
                for (Sign d : {Sign::plus, Sign::minus}) {
                    for (Sign e : {Sign::plus, Sign::minus}) {
                        const bool identified = (n + 1 == 2 * i) || (n == 2 * j);
                        const int rule = ((d == e || identified) && (j == i || j == i - 1)) ? 1 : 0;
                        if (hom_dim(n, i, d, j, e) != rule) {
                            bad.push_back("hom_dim n=" + std::to_string(n) + " i=" + std::to_string(i) +
                                          " j=" + std::to_string(j));
                        }
                    }
                }
            }
        }
    }
    return bad;
}

std::vector<std::string> sweep_packets() {
    std::vector<std::string> bad;
    for (int m = 1; m <= 20; ++m) {
        for (auto kind : {PacketKind::ds_odd, PacketKind::tempered_even}) {
            if (vogan_packet(kind, m).total() != (std::uint64_t{1} << m)) {
                bad.push_back(std::string(to_string(kind)) + " m=" + std::to_string(m) + ": total is not 2^m");
            }
        }
    }
    return bad;
}

std::vector<std::string> sweep_gp(Conjecture c, Profile profile) {
    std::vector<std::string> bad;
    for (int m = 1; m <= 12; ++m) {
        const auto r = gp_resolve(c, m, profile);
        if (std::pair{r.p, r.q} != expected_pq(c, m)) bad.push_back("m=" + std::to_string(m) + ": (p,q) off");
        const int expected_n = c == Conjecture::I ? 2 * m : 2 * m - 1;
        if (rank_one_pair(r.forms) != expected_n) bad.push_back("m=" + std::to_string(m) + ": pure forms not rank one");
    }
    return bad;
}

std::vector<std::string> sweep_cross() {
    std::vector<std::string> bad;
    for (int m = 1; m <= 12; ++m) {
        for (auto c : {Conjecture::I, Conjecture::II}) {
            if (gp_distinguished_pair(c, m, Profile::calibrated).hom_dim != 1) {
                bad.push_back("distinguished pair without symmetry breaking at m=" + std::to_string(m));
            }
        }
    }
    for (int n = 3; n <= 12; ++n) {
        for (int i = 0; i <= n / 2; ++i) {
            for (int j = 0; j <= (n - 1) / 2; ++j) {
                for (Sign d : {Sign::plus, Sign::minus}) {
                    for (Sign e : {Sign::plus, Sign::minus}) {
                        if (hom_dim(n, i, d, j, e) == 1 &&
                            psr_multiplicity(n, i, ScalarParam{i}, d, j, ScalarParam{j}, e).value < 1) {
                            bad.push_back("soft check n=" + std::to_string(n) + " i=" + std::to_string(i) +
                                          " j=" + std::to_string(j));
                        }
                    }
                }
            }
        }
    }
    return bad;
}

const std::vector<Sweep>& sweeps() {
    static const std::vector<Sweep> list{
        {"mult/sweep", sweep_multiplicity_table},
        {"mult/multiplicity-one", sweep_multiplicity_one},
        {"psr/infchar-oracle", sweep_infchar},
        {"irreps/classification", sweep_classification},
        {"branch/rule", sweep_branching},
        {"gp/packets", sweep_packets},
        {"gp/conjecture-I", [] {
             auto bad = sweep_gp(Conjecture::I, Profile::literal);
             auto more = sweep_gp(Conjecture::I, Profile::calibrated);
             bad.insert(bad.end(), more.begin(), more.end());
             return bad;
         }},
        {"gp/conjecture-II", [] {
             auto bad = sweep_gp(Conjecture::II, Profile::calibrated);
             if (!gp_resolve(Conjecture::II, 2, Profile::literal).warning) bad.push_back("literal divergence not flagged");
             return bad;
         }},
        {"cross/consistency", sweep_cross},
    };
    return list;
}

bool selected(std::string_view name, std::string_view filter) { return name.substr(0, filter.size()) == filter; }

}  // namespace

std::size_t SelftestReport::failure_count() const {
    std::size_t n = 0;
    for (const auto& c : criteria) n += c.failures.size();
    return n;
}

std::filesystem::path default_vector_path() { return SBC_DEFAULT_VECTORS; }

SelftestReport run_selftest(const std::filesystem::path& vectors, std::string_view filter) {
    const auto golden = load_vectors(vectors);
    SelftestReport report;

    std::map<std::string, CriterionOutcome> by_criterion;
    std::vector<std::string> order;
    for (const auto& v : golden) {
        const std::string name = v.criterion + "/golden";
        if (!selected(name, filter)) continue;
        auto [it, inserted] = by_criterion.try_emplace(name, CriterionOutcome{name, true, "", {}});
        if (inserted) order.push_back(name);
        Json actual;
        try {
            actual = op_table().find(v.op)->second(v.input);
        } catch (const std::exception& e) {
            actual = Json{{"error", e.what()}};
        }
        if (!matches(v.expect, actual)) {
            it->second.passed = false;
            it->second.failures.push_back(describe(v, actual));
        }
        it->second.summary = std::to_string(std::count_if(golden.begin(), golden.end(),
                                                          [&](const GoldenVector& g) { return g.criterion + "/golden" == name; })) +
                              " vectors";
    }
    for (const auto& name : order) report.criteria.push_back(std::move(by_criterion.at(name)));

    for (const auto& sweep : sweeps()) {
        if (!selected(sweep.name, filter)) continue;
        CriterionOutcome outcome{sweep.name, true, "invariant sweep", {}};
        const auto violations = sweep.run();
        if (!violations.empty()) {
            outcome.passed = false;
            outcome.failures.push_back(std::to_string(violations.size()) + " violation(s), first: " + violations.front());
        }
        report.criteria.push_back(std::move(outcome));
    }
    return report;
}

}  // namespace sbc::cli
