#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "clawreconf/decider.hpp"
#include "clawreconf/graph.hpp"
#include "clawreconf/reconfig.hpp"
#include "clawreconf/resolution.hpp"

namespace clawreconf {

inline constexpr int kSchemaVersion = 1;

/// { "model", "start", "moves": [[from, to], ...] } with vertex labels.
nlohmann::ordered_json certificate_json(const Graph& g, const ReconfigSequence& seq);

/// Inverse of `certificate_json`. Throws ParseError on unknown labels or shape.
ReconfigSequence certificate_from_json(const Graph& g, const nlohmann::ordered_json& doc);

/// { "cycle", "kind", "witness" }; internal-digraph witnesses also carry "orientation".
nlohmann::ordered_json resolution_json(const Graph& g, const BadCycle& c, const ResolutionCertificate& cert);

/// { "schema", "answer", "model", "method", "reason", "certificate", "resolutions", "stats" }.
nlohmann::ordered_json decision_json(const Graph& g, const Decision& d);

/// A graph with two token sets. The sets are validated against `graph`.
struct Instance {
    Graph graph;
    IndependentSet i;
    IndependentSet j;
    Model model = Model::TS;
};

/// { "graph": "<edge list>", "I": [labels], "J": [labels], "model": "TS" | "TJ" }.
/// "model" defaults to TS. Throws ParseError or PreconditionError.
Instance parse_instance(std::string_view text);

std::string instance_json(const Graph& g, std::span<const Vertex> i, std::span<const Vertex> j, Model model);

}  // namespace clawreconf
