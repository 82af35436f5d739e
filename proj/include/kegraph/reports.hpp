#pragma once

#include <string>

#include <json.hpp>

#include "kegraph/criticality.hpp"
#include "kegraph/ke_analysis.hpp"

namespace kegraph {

// JSON views of the analysis results. Keys are emitted in sorted order,
// vertex sets as sorted arrays and edges as [u, v] with u < v, so the
// output is byte-stable for a given input.

nlohmann::json to_json(const VertexSet& s);
nlohmann::json to_json(const EdgeSet& s);
nlohmann::json to_json(const ParameterReport& r);
nlohmann::json to_json(const CriticalityReport& r);
nlohmann::json to_json(const KeDecomposition& d);
nlohmann::json to_json(const S0Trace& t);
nlohmann::json to_json(const G0Equivalence& t);

/// Undirected DOT; α-critical edges carry class=alpha_critical, μ-critical
/// edges class=mu_critical, core vertices class=core.
std::string to_dot(const Graph& g, const VertexSet& core, const EdgeSet& alpha_critical, const EdgeSet& mu_critical);

std::string to_text(const ParameterReport& r);
std::string to_text(const CriticalityReport& r);
std::string to_text(const KeDecomposition& d);

}  // namespace kegraph
