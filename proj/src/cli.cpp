#include "sbc/cli.hpp"

#include "sbc/json_io.hpp"

#include <CLI11.hpp>

#include <ostream>

namespace sbc::cli {

namespace {

enum class Format { table, json, dot };

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Format parse_format(const std::string& text, bool dot_allowed) {
    if (text == "table") return Format::table;
    if (text == "json") return Format::json;
    if (text == "dot") {
        if (!dot_allowed) throw UsageError("--format dot is only available for 'branch'");
        return Format::dot;
    }
    throw UsageError("--format must be table, json or dot (got '" + text + "')");
}

std::string group_name(int n) { return to_string(GroupDescriptor{n + 1, 1}); }

std::string irrep_label(const IrrepRho& r, bool big_side) {
    std::string s = big_side ? "Pi_{" : "pi_{";
    s += std::to_string(r.ell) + ",";
    s += to_string(r.sign);
    return s + "}";
}

struct MultArgs {
    int n = 0, i = 0, j = 0;
    std::string lambda = "generic", nu = "generic", delta = "+", epsilon = "+";
    bool generic = false;
    std::string format = "table";
};

void print_mult(const MultArgs& a, std::ostream& out) {
    const Format fmt = parse_format(a.format, false);
    const ScalarParam lambda = parse_scalar(a.generic ? "generic" : a.lambda);
    const ScalarParam nu = parse_scalar(a.generic ? "generic" : a.nu);
    const Sign delta = parse_sign(a.delta);
    const Sign epsilon = parse_sign(a.epsilon);
    const auto result = psr_multiplicity(a.n, a.i, lambda, delta, a.j, nu, epsilon);
    if (fmt == Format::json) {
        out << render(multiplicity_json(a.n, a.i, lambda, delta, a.j, nu, epsilon, result));
        return;
    }
    out << "multiplicity " << result.value << " case " << result.case_label << "\n";
    out << "  I_" << to_string(delta) << "(" << a.i << ", " << to_string(lambda) << ") of " << group_name(a.n) << " -> J_"
        << to_string(epsilon) << "(" << a.j << ", " << to_string(nu) << ") of " << group_name(a.n - 1) << "\n";
    out << "  possible values {";
    bool first = true;
    for (int v : multiplicity_support(a.n, a.i, a.j)) {
        out << (first ? "" : ",") << v;
        first = false;
    }
    out << "}\n";
}

void print_irreps(int n, const std::string& format, std::ostream& out) {
    const Format fmt = parse_format(format, false);
    const auto irreps = irreps_with_rho(n);
    if (fmt == Format::json) {
        Json list = Json::array();
        for (const auto& r : irreps) {
            Json item = r;
            item["classification"] = std::string(to_string(classify_irrep(r)));
            item["central_character_nontrivial"] = central_character_nontrivial(r);
            item["theta"] = theta_stable_parameter(r);
            list.push_back(item);
        }
        out << render(Json{{"n", n}, {"group", Json(GroupDescriptor{n + 1, 1})}, {"irreps", list}});
        return;
    }
    out << group_name(n) << ": " << irreps.size() << " irreducible representations with infinitesimal character rho\n";
    for (const auto& r : irreps) {
        out << "  " << irrep_label(r, true) << "  " << to_string(classify_irrep(r)) << "  center "
            << (central_character_nontrivial(r) ? "nontrivial" : "trivial") << "  "
            << to_string(theta_stable_parameter(r)) << "\n";
    }
}

void print_branch(int n, const std::string& format, std::ostream& out) {
    const Format fmt = parse_format(format, true);
    const auto g = branching_graph(n);
    if (fmt == Format::dot) {
        out << to_dot(g);
        return;
    }
    if (fmt == Format::json) {
        out << render(branching_graph_json(g));
        return;
    }
    out << "branching " << group_name(n) << " > " << group_name(n - 1) << ": " << g.nodes_big.size() << " big, "
        << g.nodes_small.size() << " small, " << g.edges.size() << " edges\n";
    for (const auto& [big, small] : g.edges) {
        const auto arrow = theta_arrow(n, big.ell, big.sign, small.ell, small.sign);
        out << "  " << node_id(big, true) << " -> " << node_id(small, false) << "  "
            << (arrow->vertical ? "vertical" : "slanted") << "  " << to_string(*arrow) << "\n";
    }
}

void print_theta(int n, int ell, const std::string& delta, const std::string& format, std::ostream& out) {
    const Format fmt = parse_format(format, false);
    const IrrepRho r = canonical_irrep(n, ell, parse_sign(delta));
    const ThetaParam t = theta_stable_parameter(r);
    if (fmt == Format::json) {
        out << render(Json{{"irrep", r}, {"theta", t}, {"text", to_string(t)}});
        return;
    }
    out << to_string(t) << "\n";
    out << "  " << irrep_label(r, true) << " of " << group_name(n) << ", Levi";
    for (const auto& f : aq_levi(n, r.ell)) out << " " << to_string(f);
    out << "\n";
}

void print_gp(const std::string& conjecture, int m, const std::string& profile, const std::string& format,
              std::ostream& out) {
    const Format fmt = parse_format(format, false);
    const auto pair = gp_distinguished_pair(parse_conjecture(conjecture), m, parse_profile(profile));
    const auto& r = pair.resolution;
    if (fmt == Format::json) {
        Json j = r;
        j["distinguished"] = Json{{"big", pair.big}, {"small", pair.small}, {"hom_dim", pair.hom_dim}};
        out << render(j);
        return;
    }
    out << "conjecture " << to_string(r.conjecture) << " m=" << m << " profile " << to_string(r.profile) << ": (p,q)=("
        << r.p << "," << r.q << ")\n";
    out << "  chi_first  " << to_string(r.chi_first) << "\n";
    out << "  chi_second " << to_string(r.chi_second) << "\n";
    out << "  pure forms " << to_string(r.forms.first) << " x " << to_string(r.forms.second) << "\n";
    out << "  distinguished " << irrep_label(pair.big, true) << " of " << group_name(pair.big.n) << " -> "
        << irrep_label(pair.small, false) << " of " << group_name(pair.small.n) << ", hom_dim " << pair.hom_dim << "\n";
    if (r.warning) out << "  warning: " << *r.warning << "\n";
}

void print_packet(const std::string& kind, int m, const std::string& format, std::ostream& out) {
    const Format fmt = parse_format(format, false);
    const auto p = vogan_packet(parse_packet_kind(kind), m);
    if (fmt == Format::json) {
        out << render(Json(p));
        return;
    }
    out << to_string(p.kind) << " packet m=" << m << ": " << p.total() << " members over " << p.members.size()
        << " pure forms\n";
    for (const auto& mem : p.members) out << "  " << to_string(mem.form) << "  " << mem.count << "\n";
}

int print_selftest(const std::string& vectors, const std::string& filter, std::ostream& out) {
    const auto report = run_selftest(vectors.empty() ? default_vector_path() : std::filesystem::path(vectors), filter);
    for (const auto& c : report.criteria) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.summary << ")\n";
        for (const auto& f : c.failures) out << "  " << f << "\n";
    }
    out << report.criteria.size() << " criteria, " << report.failure_count() << " failure(s)\n";
    return report.passed() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact symmetry-breaking calculator for SO(n+1,1) > SO(n,1)", "sbcalc"};
    app.require_subcommand(1);

    MultArgs mult;
    auto* mult_cmd = app.add_subcommand("mult", "multiplicity between principal series I_delta(i,lambda) and J_eps(j,nu)");
    mult_cmd->add_option("--n", mult.n, "SO(n+1,1) > SO(n,1)")->required();
    mult_cmd->add_option("--i", mult.i, "degree on the big group")->required();
    mult_cmd->add_option("--j", mult.j, "degree on the subgroup")->required();
    mult_cmd->add_option("--lambda", mult.lambda, "scalar: a, a/b, a/b+c/d*i or generic");
    mult_cmd->add_option("--nu", mult.nu, "scalar: a, a/b, a/b+c/d*i or generic");
    mult_cmd->add_option("--delta", mult.delta, "+ or -");
    mult_cmd->add_option("--epsilon", mult.epsilon, "+ or -");
    mult_cmd->add_flag("--generic", mult.generic, "same as --lambda generic --nu generic");
    mult_cmd->add_option("--format", mult.format, "table or json");

    int n = 0;
    int ell = 0;
    int m = 0;
    std::string format = "table";
    std::string sign = "+";
    std::string conjecture;
    std::string profile = "calibrated";
    std::string kind;
    std::string filter;
    std::string vectors;

    auto* irreps_cmd = app.add_subcommand("irreps", "irreducibles of SO(n+1,1) with infinitesimal character rho");
    irreps_cmd->add_option("--n", n)->required();
    irreps_cmd->add_option("--format", format);

    auto* branch_cmd = app.add_subcommand("branch", "branching graph between rho-irreducibles");
    branch_cmd->add_option("--n", n)->required();
    branch_cmd->add_option("--format", format, "table, json or dot");

    auto* theta_cmd = app.add_subcommand("theta", "theta-stable parameter of Pi_{ell,delta}");
    theta_cmd->add_option("--n", n)->required();
    theta_cmd->add_option("--ell", ell)->required();
    theta_cmd->add_option("--delta", sign);
    theta_cmd->add_option("--format", format);

    auto* gp_cmd = app.add_subcommand("gp", "distinguished pure inner forms and representations");
    gp_cmd->add_option("--conjecture", conjecture, "I or II")->required();
    gp_cmd->add_option("--m", m)->required();
    gp_cmd->add_option("--profile", profile, "literal or calibrated");
    gp_cmd->add_option("--format", format);

    auto* packet_cmd = app.add_subcommand("packet", "Vogan packet census over pure inner forms");
    packet_cmd->add_option("--kind", kind, "ds-odd or tempered-even")->required();
    packet_cmd->add_option("--m", m)->required();
    packet_cmd->add_option("--format", format);

    auto* selftest_cmd = app.add_subcommand("selftest", "golden vectors and invariant sweeps");
    selftest_cmd->add_option("--filter", filter, "run criteria whose name starts with this prefix");
    selftest_cmd->add_option("--vectors", vectors, "golden-vector file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "sbcalc: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*mult_cmd) print_mult(mult, out);
        else if (*irreps_cmd) print_irreps(n, format, out);
        else if (*branch_cmd) print_branch(n, format, out);
        else if (*theta_cmd) print_theta(n, ell, sign, format, out);
        else if (*gp_cmd) print_gp(conjecture, m, profile, format, out);
        else if (*packet_cmd) print_packet(kind, m, format, out);
        else if (*selftest_cmd) return print_selftest(vectors, filter, out);
    } catch (const UsageError& e) {
        err << "sbcalc: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "sbcalc: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "sbcalc: " << e.what() << "\n";
        return 1;
    } catch (const UnsupportedScalarError& e) {
        err << "sbcalc: " << e.what() << "\n";
        return 1;
    } catch (const std::runtime_error& e) {
        err << "sbcalc: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace sbc::cli
