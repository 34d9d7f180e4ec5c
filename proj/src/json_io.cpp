#include "sbc/json_io.hpp"

namespace sbc {

void to_json(Json& j, Sign s) { j = std::string(to_string(s)); }
void from_json(const Json& j, Sign& s) { s = parse_sign(j.get<std::string>()); }

void to_json(Json& j, const Rational& r) { j = to_string(r); }
void from_json(const Json& j, Rational& r) { r = parse_rational(j.get<std::string>()); }

void to_json(Json& j, const ScalarParam& s) { j = to_string(s); }
void from_json(const Json& j, ScalarParam& s) { s = parse_scalar(j.get<std::string>()); }

void to_json(Json& j, const GroupDescriptor& g) { j = Json::array({g.p, g.q}); }
void from_json(const Json& j, GroupDescriptor& g) { g = GroupDescriptor::so(j.at(0).get<int>(), j.at(1).get<int>()); }

void to_json(Json& j, const IrrepRho& r) { j = Json{{"n", r.n}, {"ell", r.ell}, {"sign", r.sign}}; }
void from_json(const Json& j, IrrepRho& r) {
    r = IrrepRho{j.at("n").get<int>(), j.at("ell").get<int>(), j.at("sign").get<Sign>()};
}

void to_json(Json& j, const ThetaParam& t) {
    j = Json{{"head", t.head}, {"char", Json{{"k", t.tail.k}, {"sign", t.tail.sign}}}};
}
void from_json(const Json& j, ThetaParam& t) {
    t.head = j.at("head").get<std::vector<Rational>>();
    t.tail = LeviCharacter{j.at("char").at("k").get<int>(), j.at("char").at("sign").get<Sign>()};
}

void to_json(Json& j, const MultiplicityResult& m) { j = Json{{"value", m.value}, {"case", m.case_label}}; }
void from_json(const Json& j, MultiplicityResult& m) {
    m = MultiplicityResult{j.at("value").get<int>(), j.at("case").get<std::string>()};
}

void to_json(Json& j, const GpResolution& r) {
    j = Json{{"conjecture", std::string(to_string(r.conjecture))},
             {"m", r.m},
             {"chi_first", r.chi_first},
             {"chi_second", r.chi_second},
             {"p", r.p},
             {"q", r.q},
             {"forms", Json::array({r.forms.first, r.forms.second})},
             {"profile", std::string(to_string(r.profile))}};
    if (const auto n = rank_one_pair(r.forms)) j["rank_one_n"] = *n;
    if (r.warning) j["warning"] = *r.warning;
}
void from_json(const Json& j, GpResolution& r) {
    r.conjecture = parse_conjecture(j.at("conjecture").get<std::string>());
    r.m = j.at("m").get<int>();
    r.chi_first = j.at("chi_first").get<SignVector>();
    r.chi_second = j.at("chi_second").get<SignVector>();
    r.p = j.at("p").get<int>();
    r.q = j.at("q").get<int>();
    r.forms = {j.at("forms").at(0).get<GroupDescriptor>(), j.at("forms").at(1).get<GroupDescriptor>()};
    r.profile = parse_profile(j.at("profile").get<std::string>());
    r.warning.reset();
    if (j.contains("warning")) r.warning = j.at("warning").get<std::string>();
}

void to_json(Json& j, const VoganPacket& p) {
    Json members = Json::array();
    for (const auto& mem : p.members) members.push_back(Json{{"form", mem.form}, {"count", mem.count}});
    j = Json{{"kind", std::string(to_string(p.kind))},
             {"m", p.m},
             {"rank", p.character_group_rank},
             {"total", p.total()},
             {"members", members}};
}

void to_json(Json& j, const CompositionSeries& c) {
    if (c.split) {
        j = Json{{"split", true}, {"summands", Json::array({c.first, c.second})}};
    } else {
        j = Json{{"split", false}, {"sub", c.first}, {"quotient", c.second}};
    }
}

Json branching_graph_json(const BranchingGraph& g) {
    auto nodes = [](const std::vector<IrrepRho>& list, bool big) {
        Json arr = Json::array();
        for (const auto& r : list) {
            Json node = r;
            node["id"] = node_id(r, big);
            arr.push_back(node);
        }
        return arr;
    };
    Json edges = Json::array();
    for (const auto& [big, small] : g.edges) edges.push_back(Json::array({node_id(big, true), node_id(small, false)}));
    return Json{{"n", g.n}, {"nodes_big", nodes(g.nodes_big, true)}, {"nodes_small", nodes(g.nodes_small, false)},
                {"edges", edges}};
}

Json multiplicity_json(int n, int i, const ScalarParam& lambda, Sign delta, int j, const ScalarParam& nu, Sign epsilon,
                       const MultiplicityResult& result) {
    Json out = result;
    out["inputs"] = Json{{"n", n}, {"i", i}, {"lambda", lambda}, {"delta", delta},
                         {"j", j}, {"nu", nu}, {"epsilon", epsilon}};
    return out;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace sbc
