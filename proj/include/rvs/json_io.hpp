#pragma once

#include <string>

#include <json.hpp>

#include "rvs/braid.hpp"
#include "rvs/charge.hpp"
#include "rvs/flow.hpp"

namespace rvs {

inline constexpr const char* kSchemaVersion = "rvs-report/1";

using Json = nlohmann::ordered_json;

/// {"name", "vertices", "edges": [[i, j, mult], ...], "loops": [...]}.
/// Repeated pairs must agree; self-edges are rejected (use "loops").
Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g);
Graph load_graph(const std::string& path);

Json matrix_to_json(const IntMatrix& m);
Json root_to_json(const RootVec& r);
Json signed_word_to_json(const SignedWord& w);

Json region_to_json(const Region& region);

/// [{"alcove": word, "gen": i, "above": bool}, ...], keyed by the base side.
Json flow_to_json(const FlowAssignment& flow);
/// Throws Parse on malformed or contradictory entries and
/// IncompleteAssignment when an interior wall is missing. A report object
/// carrying the array under "flow" is accepted too.
FlowAssignment flow_from_json(std::shared_ptr<const Region> region, const Json& j);

Json validation_to_json(const Region& region, const FlowValidation& v);
Json positivity_to_json(const Region& region, const PositivityReport& r);
Json wall_report_to_json(const Region& region, const WallVanishingReport& r);
Json sign_patterns_to_json(FlatType type, const std::vector<SignPattern>& patterns);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace rvs
