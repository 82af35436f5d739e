#pragma once

#include "kegraph/errors.hpp"
#include "kegraph/graph.hpp"

namespace kegraph {

struct CriticalityReport {
  EdgeSet alpha_critical_edges;
  EdgeSet mu_critical_edges;
  VertexSet alpha_critical_vertices;

  int eta() const { return static_cast<int>(alpha_critical_edges.size()); }
};

/// How α-critical edges are found.
enum class AlphaCriticalRoute {
  /// Recompute α(G-e) for every edge.
  kDefinition,
  /// Only edges in every maximum matching are candidates. Valid for KE
  /// graphs only; throws PreconditionError otherwise.
  kKeShortcut,
};

/// Edges e with α(G-e) > α(G).
EdgeSet alpha_critical_edges(const Graph& g, const SolverLimits& limits = {},
                             AlphaCriticalRoute route = AlphaCriticalRoute::kDefinition);

/// Edges e with μ(G-e) < μ(G).
EdgeSet mu_critical_edges(const Graph& g, const SolverLimits& limits = {});

/// Vertices v with α(G-v) < α(G).
VertexSet alpha_critical_vertices(const Graph& g, const SolverLimits& limits = {});

/// All three sets. For KE graphs the shortcut route also runs and must agree
/// with the definition, otherwise InternalError.
CriticalityReport criticality_report(const Graph& g, const SolverLimits& limits = {});

}  // namespace kegraph
