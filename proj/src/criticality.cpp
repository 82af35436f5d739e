#include "kegraph/criticality.hpp"

#include <vector>

#include "bitgraph.hpp"
#include "kegraph/matching.hpp"
#include "kegraph/stable_sets.hpp"

namespace kegraph {

namespace {

// α(G-e) > α(G) iff some maximum stable set of G-e holds both ends, i.e.
// 2 + α(G - N[u] - N[v]) > α(G) with N taken in G-e.
bool raises_alpha(const detail::BitGraph& bg, int alpha, const Edge& e) {
  const detail::Mask keep = bg.all() & ~(bg.neighbors(e.u) | bg.neighbors(e.v) | detail::bit(e.u) | detail::bit(e.v));
  return 2 + detail::count(detail::max_stable_within(bg, keep)) > alpha;
}

}  // namespace

EdgeSet alpha_critical_edges(const Graph& g, const SolverLimits& limits, AlphaCriticalRoute route) {
  const int alpha = stability_number(g, limits);
  std::vector<Edge> out;
  if (route == AlphaCriticalRoute::kDefinition) {
    for (const auto& e : g.edges()) {
      if (stability_number(delete_edge(g, e), limits) > alpha) out.push_back(e);
    }
    return EdgeSet(std::move(out));
  }
  if (alpha + matching_number(g) != g.order()) {
    throw PreconditionError("the matching-edge shortcut for alpha-critical edges needs a König-Egerváry graph");
  }
  const detail::BitGraph bg(g);
  for (const auto& e : mu_critical_edges(g, limits)) {
    if (raises_alpha(bg, alpha, e)) out.push_back(e);
  }
  return EdgeSet(std::move(out));
}

EdgeSet mu_critical_edges(const Graph& g, const SolverLimits& limits) { return forced_matching_edges(g, limits); }

VertexSet alpha_critical_vertices(const Graph& g, const SolverLimits& limits) {
  const int alpha = stability_number(g, limits);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (stability_number(delete_vertices(g, VertexSet{v}).graph, limits) < alpha) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

CriticalityReport criticality_report(const Graph& g, const SolverLimits& limits) {
  CriticalityReport report;
  report.alpha_critical_edges = alpha_critical_edges(g, limits);
  report.mu_critical_edges = mu_critical_edges(g, limits);
  report.alpha_critical_vertices = alpha_critical_vertices(g, limits);
  if (stability_number(g, limits) + matching_number(g) == g.order()) {
    if (alpha_critical_edges(g, limits, AlphaCriticalRoute::kKeShortcut) != report.alpha_critical_edges) {
      throw InternalError("alpha-critical edges: shortcut route disagrees with the definition");
    }
  }
  return report;
}

}  // namespace kegraph
