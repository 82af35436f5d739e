#pragma once

#include <cstddef>
#include <vector>

#include "kegraph/errors.hpp"
#include "kegraph/graph.hpp"

namespace kegraph {

/// Ω(G) together with the derived core/anticore.
struct StableSetReport {
  int alpha = 0;
  /// All maximum stable sets, lexicographically ordered.
  std::vector<VertexSet> omega;
  /// Intersection of all maximum stable sets.
  VertexSet core;
  /// Vertices in no maximum stable set.
  VertexSet anticore;

  int xi() const { return static_cast<int>(core.size()); }
  int sigma() const { return static_cast<int>(anticore.size()); }
};

/// α(G) by branch and bound. Throws CapacityError above limits.max_alpha_vertices.
int stability_number(const Graph& g, const SolverLimits& limits = {});

/// Some maximum stable set.
VertexSet maximum_stable_set(const Graph& g, const SolverLimits& limits = {});

/// The lexicographically smallest maximum stable set (as a sorted sequence).
VertexSet smallest_maximum_stable_set(const Graph& g, const SolverLimits& limits = {});

/// Enumerates Ω(G) completely. Throws CapacityError if n exceeds
/// limits.max_omega_vertices or |Ω| exceeds `cap`; a truncated Ω would make
/// core and anticore wrong, so there is no partial result.
StableSetReport enumerate_maximum_stable_sets(const Graph& g, std::size_t cap, const SolverLimits& limits = {});
StableSetReport enumerate_maximum_stable_sets(const Graph& g, const SolverLimits& limits = {});

struct CoreAnticore {
  int alpha = 0;
  VertexSet core;
  VertexSet anticore;
};

/// core and anticore without listing Ω: v ∈ core iff α(G-v) < α(G), and v is
/// in no maximum stable set iff 1 + α(G-N[v]) < α(G).
CoreAnticore core_and_anticore(const Graph& g, const SolverLimits& limits = {});

}  // namespace kegraph
