#include "kegraph/harness/graph_facts.hpp"

#include "kegraph/criticality.hpp"

namespace kegraph::harness {

GraphFacts::GraphFacts(Graph g, SolverLimits limits) : g_(std::move(g)), limits_(limits) {}

int GraphFacts::alpha() {
  if (!alpha_) alpha_ = stability_number(g_, limits_);
  return *alpha_;
}

int GraphFacts::mu() {
  if (!mu_) mu_ = matching_number(g_);
  return *mu_;
}

bool GraphFacts::is_ke() { return alpha() + mu() == n(); }

bool GraphFacts::is_bipartite() {
  if (!bipartite_) bipartite_ = kegraph::is_bipartite(g_);
  return *bipartite_;
}

bool GraphFacts::is_tree() { return kegraph::is_tree(g_); }

bool GraphFacts::is_proper_graph() { return m() >= 1 && is_connected(g_); }

const VertexSet& GraphFacts::core() {
  if (!core_) core_ = core_and_anticore(g_, limits_);
  return core_->core;
}

const VertexSet& GraphFacts::anticore() {
  core();
  return core_->anticore;
}

ParameterEqualities GraphFacts::equalities() { return evaluate_equalities(n(), alpha(), mu(), xi(), sigma(), eta()); }

const StableSetReport& GraphFacts::omega() {
  if (!omega_) omega_ = enumerate_maximum_stable_sets(g_, limits_);
  return *omega_;
}

const EdgeSet& GraphFacts::alpha_critical() {
  if (!alpha_critical_) alpha_critical_ = alpha_critical_edges(g_, limits_);
  return *alpha_critical_;
}

const EdgeSet& GraphFacts::mu_critical() {
  if (!mu_critical_) mu_critical_ = mu_critical_edges(g_, limits_);
  return *mu_critical_;
}

const PerfectMatchingStatus& GraphFacts::perfect_matchings() {
  if (!pm_) pm_ = perfect_matching_status(g_);
  return *pm_;
}

const Relabeled& GraphFacts::g0() {
  if (!g0_) g0_ = delete_vertices(g_, neighborhood(g_, core(), true));
  return *g0_;
}

GraphFacts& GraphFacts::g0_facts() {
  if (!g0_facts_) g0_facts_ = std::make_unique<GraphFacts>(g0().graph, limits_);
  return *g0_facts_;
}

}  // namespace kegraph::harness
