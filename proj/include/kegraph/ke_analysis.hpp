#pragma once

#include <optional>
#include <vector>

#include "kegraph/errors.hpp"
#include "kegraph/graph.hpp"
#include "kegraph/matching.hpp"

namespace kegraph {

/// G = S * H: S a maximum stable set, H = G[V-S] of order μ(G), and a
/// matching inside the cut (S, V-S) saturating V(H).
struct KeDecomposition {
  VertexSet s;
  VertexSet h_vertices;
  Matching cut_matching;
};

struct ParameterEqualities {
  bool xi_eta_alpha = false;     // ξ + η = α
  bool sigma_eta_mu = false;     // σ + η = μ
  bool xi_2eta_sigma_n = false;  // ξ + 2η + σ = n
};

struct ParameterReport {
  int n = 0;
  int m = 0;
  int alpha = 0;
  int mu = 0;
  int xi = 0;
  int sigma = 0;
  int eta = 0;
  bool is_ke = false;
  bool is_bipartite = false;
  bool is_tree = false;
  VertexSet core;
  VertexSet anticore;
  EdgeSet alpha_critical_edges;
  EdgeSet mu_critical_edges;
  int g0_size = 0;
  PerfectMatchingCount g0_pm_status = PerfectMatchingCount::kNone;
  ParameterEqualities equalities;
};

struct S0Step {
  VertexSet s0;
  VertexSet d;
};

/// Run of the S0 construction. steps[0] is the initial state ({b1}, {b1});
/// each further entry is the state after one pass of the while loop.
/// s0 is the final set, after the unmatched B-side vertices are completed.
struct S0Trace {
  VertexSet s0;
  std::vector<S0Step> steps;
  Edge target_edge;
};

struct G0Equivalence {
  bool g0_unique_perfect_matching = false;
  bool g0_alpha_critical_maximal_matching = false;
  bool xi_eta_alpha = false;
  bool sigma_eta_mu = false;
  bool xi_2eta_sigma_n = false;

  /// All five clauses agree.
  bool consistent() const;
};

struct ForestCondition {
  bool holds = false;
  /// First S ∈ Ω in lexicographic order whose cut (S, V-S) is acyclic.
  std::optional<VertexSet> witness;
  EdgeSet cut;
};

/// α(G) + μ(G) = n(G).
bool is_koenig_egervary(const Graph& g, const SolverLimits& limits = {});

/// S is the lexicographically smallest maximum stable set. Every maximum
/// matching of a KE graph lies in (S, V-S); the returned matching is checked
/// against that, and a violation raises InternalError.
KeDecomposition ke_decompose(const Graph& g, const SolverLimits& limits = {});

/// G0 = G - N[core(G)], relabeled densely.
Relabeled g_zero(const Graph& g, const SolverLimits& limits = {});

/// Builds a maximum stable set S0 of g0 containing b1 and avoiding N(a1)
/// except b1, where a1 is b1's partner in the unique perfect matching `pm`.
///
///   S0 := {b1};  D := {b1}
///   while (N(D) ∩ A) - M(S0) ≠ ∅:
///     S1 := S0;  S0 := S0 ∪ M((N(D) ∩ A) - M(S0));  D := S0 - S1
///   S0 := S0 ∪ M(B - S0)
///
/// M(X) maps vertices to their pm-partners. Preconditions: pm is the unique
/// perfect matching of g0, a_side holds one endpoint of every pm edge and is
/// stable, b1 is not in a_side. On exit S0 ∈ Ω(g0) and S0 ∪ {a1} is stable in
/// g0 - a1b1; a violated postcondition raises InternalError.
S0Trace s0_procedure(const Graph& g0, const Matching& pm, const VertexSet& a_side, Vertex b1,
                     const SolverLimits& limits = {});

/// Every parameter at once. For KE inputs it also verifies α+σ = μ+ξ and the
/// three inequalities ξ+η ≤ α, σ+η ≤ μ, ξ+2η+σ ≤ n before returning.
ParameterReport parameter_report(const Graph& g, const SolverLimits& limits = {});

/// The five clauses: G0 has a unique perfect matching; the α-critical edges
/// of G0 form a maximal matching of G0; the three parameter equalities.
/// Throws PreconditionError for non-KE graphs.
G0Equivalence th2_evaluate(const Graph& g, const SolverLimits& limits = {});

/// Whether some S ∈ Ω(G) has an acyclic cut (S, V-S). Requires KE.
ForestCondition forest_condition(const Graph& g, const SolverLimits& limits = {});

ParameterEqualities evaluate_equalities(int n, int alpha, int mu, int xi, int sigma, int eta);

}  // namespace kegraph
