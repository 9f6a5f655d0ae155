#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "walkmine/criterion.hpp"
#include "walkmine/scp_miner.hpp"
#include "walkmine/stp_miner.hpp"

namespace walkmine {

using ojson = nlohmann::ordered_json;

/// {"atom": {"f": name, "op": "<=", "v": value|null}} | {"all": [...]} | {"any": [...]}
ojson criterion_to_json(const FeatureSchema& schema, const Criterion& c);
/// Throws InputError (with a JSON-path location) on malformed or invalid
/// criteria.
Criterion criterion_from_json(const FeatureSchema& schema, const nlohmann::json& j, const std::string& where = "$");
TosetProgram toset_program_from_json(const FeatureSchema& schema, const nlohmann::json& j);

ojson color_program_to_json(const DirectedGraph& g, const ColorProgram& p);
ojson toset_program_to_json(const FeatureSchema& schema, const TosetProgram& p);
ojson trace_to_json(const DirectedGraph& g, const EndpointTrace& trace);
ojson classification_to_json(const Classification& c);
ojson stats_to_json(const SearchStats& stats);

/// {"engine", "mode", "length", "exhausted", "programs", "stats"}.
ojson report_to_json(const DirectedGraph& g, std::string_view engine, const ScpReport& r);
ojson report_to_json(const DirectedGraph& g, const StpReport& r);

}  // namespace walkmine
