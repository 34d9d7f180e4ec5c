#pragma once

// JSON renderings. Objects use sorted keys and rationals are strings ("3/2"),
// so dump(parse(dump(x))) reproduces the bytes.

#include "sbc/branching_rho.hpp"
#include "sbc/gross_prasad.hpp"
#include "sbc/irreps_rho.hpp"
#include "sbc/multiplicity_psr.hpp"
#include "sbc/principal_series.hpp"

#include <json.hpp>

namespace sbc {

using Json = nlohmann::json;

void to_json(Json& j, Sign s);
void from_json(const Json& j, Sign& s);
void to_json(Json& j, const Rational& r);
void from_json(const Json& j, Rational& r);
void to_json(Json& j, const ScalarParam& s);
void from_json(const Json& j, ScalarParam& s);
void to_json(Json& j, const GroupDescriptor& g);
void from_json(const Json& j, GroupDescriptor& g);
void to_json(Json& j, const IrrepRho& r);
void from_json(const Json& j, IrrepRho& r);
void to_json(Json& j, const ThetaParam& t);
void from_json(const Json& j, ThetaParam& t);
void to_json(Json& j, const MultiplicityResult& m);
void from_json(const Json& j, MultiplicityResult& m);
void to_json(Json& j, const GpResolution& r);
void from_json(const Json& j, GpResolution& r);
void to_json(Json& j, const VoganPacket& p);
void to_json(Json& j, const CompositionSeries& c);

/// {"nodes_big":[...], "nodes_small":[...], "edges":[[big_id, small_id], ...]}; nodes carry their DOT id.
Json branching_graph_json(const BranchingGraph& g);

/// The multiplicity result with its query echoed under "inputs".
Json multiplicity_json(int n, int i, const ScalarParam& lambda, Sign delta, int j, const ScalarParam& nu, Sign epsilon,
                       const MultiplicityResult& result);

/// Two-space indented, trailing newline.
std::string render(const Json& j);

}  // namespace sbc
