#pragma once

#include <memory>
#include <optional>

#include "kegraph/errors.hpp"
#include "kegraph/graph.hpp"
#include "kegraph/ke_analysis.hpp"
#include "kegraph/matching.hpp"
#include "kegraph/stable_sets.hpp"

namespace kegraph::harness {

/// Lazily computed parameters of one graph, shared by all checks run on it.
/// Not thread-safe; use one instance per thread.
class GraphFacts {
 public:
  explicit GraphFacts(Graph g, SolverLimits limits = {});

  const Graph& graph() const { return g_; }
  const SolverLimits& limits() const { return limits_; }
  int n() const { return g_.order(); }
  int m() const { return static_cast<int>(g_.size()); }

  int alpha();
  int mu();
  bool is_ke();
  bool is_bipartite();
  bool is_tree();
  /// Connected with at least one edge.
  bool is_proper_graph();

  const VertexSet& core();
  const VertexSet& anticore();
  int xi() { return static_cast<int>(core().size()); }
  int sigma() { return static_cast<int>(anticore().size()); }
  int eta() { return static_cast<int>(alpha_critical().size()); }
  ParameterEqualities equalities();

  /// Full Ω(G); CapacityError above the enumeration caps.
  const StableSetReport& omega();
  const EdgeSet& alpha_critical();
  const EdgeSet& mu_critical();
  const PerfectMatchingStatus& perfect_matchings();

  /// G - N[core(G)] with its relabeling, and the facts of that graph.
  const Relabeled& g0();
  GraphFacts& g0_facts();

 private:
  Graph g_;
  SolverLimits limits_;
  std::optional<int> alpha_, mu_;
  std::optional<bool> bipartite_;
  std::optional<CoreAnticore> core_;
  std::optional<StableSetReport> omega_;
  std::optional<EdgeSet> alpha_critical_, mu_critical_;
  std::optional<PerfectMatchingStatus> pm_;
  std::optional<Relabeled> g0_;
  std::unique_ptr<GraphFacts> g0_facts_;
};

}  // namespace kegraph::harness
