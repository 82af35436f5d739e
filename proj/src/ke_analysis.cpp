#include "kegraph/ke_analysis.hpp"

#include <sstream>
#include <string>

#include "kegraph/criticality.hpp"
#include "kegraph/stable_sets.hpp"

namespace kegraph {

namespace {

std::string describe(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (Vertex v : s) {
    out << (first ? "" : ",") << v;
    first = false;
  }
  out << '}';
  return out.str();
}

std::string describe(const S0Trace& trace) {
  std::ostringstream out;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    out << "step " << i << ": S0=" << describe(trace.steps[i].s0) << " D=" << describe(trace.steps[i].d) << '\n';
  }
  out << "final S0=" << describe(trace.s0);
  return out.str();
}

void require_ke(const Graph& g, const SolverLimits& limits, const char* what) {
  if (!is_koenig_egervary(g, limits)) {
    throw PreconditionError(std::string(what) + ": not a König-Egerváry graph");
  }
}

}  // namespace

bool G0Equivalence::consistent() const {
  const bool first = g0_unique_perfect_matching;
  return g0_alpha_critical_maximal_matching == first && xi_eta_alpha == first && sigma_eta_mu == first &&
         xi_2eta_sigma_n == first;
}

ParameterEqualities evaluate_equalities(int n, int alpha, int mu, int xi, int sigma, int eta) {
  return ParameterEqualities{xi + eta == alpha, sigma + eta == mu, xi + 2 * eta + sigma == n};
}

bool is_koenig_egervary(const Graph& g, const SolverLimits& limits) {
  return stability_number(g, limits) + matching_number(g) == g.order();
}

KeDecomposition ke_decompose(const Graph& g, const SolverLimits& limits) {
  require_ke(g, limits, "decompose");
  KeDecomposition out;
  out.s = smallest_maximum_stable_set(g, limits);
  out.h_vertices = VertexSet::range(g.order()).minus(out.s);
  out.cut_matching = maximum_matching(g);
  const EdgeSet cut = cut_edges(g, out.s, out.h_vertices);
  if (!out.cut_matching.edges().is_subset_of(cut)) {
    throw InternalError("decompose: a maximum matching leaves the cut (S, V-S)");
  }
  if (out.cut_matching.size() != out.h_vertices.size()) {
    throw InternalError("decompose: cut matching does not saturate V-S");
  }
  return out;
}

Relabeled g_zero(const Graph& g, const SolverLimits& limits) {
  const auto ca = core_and_anticore(g, limits);
  return delete_vertices(g, neighborhood(g, ca.core, true));
}

S0Trace s0_procedure(const Graph& g0, const Matching& pm, const VertexSet& a_side, Vertex b1,
                     const SolverLimits& limits) {
  const int n = g0.order();
  if (static_cast<int>(pm.size()) * 2 != n || !pm.edges().is_subset_of(g0.edge_set())) {
    throw PreconditionError("S0 procedure: matching is not a perfect matching of the graph");
  }
  const auto status = perfect_matching_status(g0);
  if (!status.unique()) throw PreconditionError("S0 procedure: the perfect matching is not unique");
  if (status.witnesses.front() != pm) throw PreconditionError("S0 procedure: matching differs from the unique one");
  if (a_side.size() != pm.size() || !is_stable(g0, a_side)) {
    throw PreconditionError("S0 procedure: A must be a stable endpoint class of the matching");
  }
  std::vector<Vertex> mate(static_cast<std::size_t>(n), -1);
  for (const auto& e : pm.edges()) {
    if (a_side.contains(e.u) == a_side.contains(e.v)) {
      throw PreconditionError("S0 procedure: A must contain exactly one end of every matching edge");
    }
    mate[static_cast<std::size_t>(e.u)] = e.v;
    mate[static_cast<std::size_t>(e.v)] = e.u;
  }
  if (b1 < 0 || b1 >= n || a_side.contains(b1)) {
    throw PreconditionError("S0 procedure: b1 must be a B-side vertex");
  }
  auto matched_onto = [&](const VertexSet& x) {
    std::vector<Vertex> out;
    for (Vertex v : x) out.push_back(mate[static_cast<std::size_t>(v)]);
    return VertexSet(std::move(out));
  };

  S0Trace trace;
  const Vertex a1 = mate[static_cast<std::size_t>(b1)];
  trace.target_edge = make_edge(a1, b1);
  VertexSet s0{b1};
  VertexSet d{b1};
  trace.steps.push_back({s0, d});
  for (;;) {
    const VertexSet frontier = neighborhood(g0, d, false).intersect(a_side).minus(matched_onto(s0));
    if (frontier.empty()) break;
    const VertexSet s1 = s0;
    s0 = s0.unite(matched_onto(frontier));
    d = s0.minus(s1);
    trace.steps.push_back({s0, d});
  }
  const VertexSet b_side = VertexSet::range(n).minus(a_side);
  s0 = s0.unite(matched_onto(b_side.minus(s0)));
  trace.s0 = s0;

  const bool ok = is_stable(g0, s0) && s0.size() == pm.size() &&
                  static_cast<int>(s0.size()) == stability_number(g0, limits) && s0.contains(b1) &&
                  is_stable(delete_edge(g0, trace.target_edge), s0.unite(VertexSet{a1}));
  if (!ok) throw InternalError("S0 procedure: postcondition violated\n" + describe(trace));
  return trace;
}

ParameterReport parameter_report(const Graph& g, const SolverLimits& limits) {
  ParameterReport r;
  r.n = g.order();
  r.m = static_cast<int>(g.size());
  const auto ca = core_and_anticore(g, limits);
  r.alpha = ca.alpha;
  r.core = ca.core;
  r.anticore = ca.anticore;
  r.mu = matching_number(g);
  r.xi = static_cast<int>(r.core.size());
  r.sigma = static_cast<int>(r.anticore.size());
  const auto crit = criticality_report(g, limits);
  if (crit.alpha_critical_vertices != r.core) {
    throw InternalError("parameter report: alpha-critical vertices differ from the core");
  }
  r.alpha_critical_edges = crit.alpha_critical_edges;
  r.mu_critical_edges = crit.mu_critical_edges;
  r.eta = crit.eta();
  r.is_ke = r.alpha + r.mu == r.n;
  r.is_bipartite = is_bipartite(g);
  r.is_tree = is_tree(g);
  const auto g0 = delete_vertices(g, neighborhood(g, r.core, true));
  r.g0_size = g0.graph.order();
  r.g0_pm_status = perfect_matching_status(g0.graph).count;
  r.equalities = evaluate_equalities(r.n, r.alpha, r.mu, r.xi, r.sigma, r.eta);
  if (r.is_ke) {
    if (r.alpha + r.sigma != r.mu + r.xi) throw InternalError("parameter report: alpha + sigma != mu + xi on a KE graph");
    if (r.xi + r.eta > r.alpha || r.sigma + r.eta > r.mu || r.xi + 2 * r.eta + r.sigma > r.n) {
      throw InternalError("parameter report: parameter inequality violated on a KE graph");
    }
  }
  return r;
}

G0Equivalence th2_evaluate(const Graph& g, const SolverLimits& limits) {
  require_ke(g, limits, "G0 equivalence evaluation");
  const auto r = parameter_report(g, limits);
  const auto g0 = g_zero(g, limits);
  G0Equivalence t;
  t.g0_unique_perfect_matching = perfect_matching_status(g0.graph).unique();
  t.g0_alpha_critical_maximal_matching = is_maximal_matching(g0.graph, alpha_critical_edges(g0.graph, limits));
  t.xi_eta_alpha = r.equalities.xi_eta_alpha;
  t.sigma_eta_mu = r.equalities.sigma_eta_mu;
  t.xi_2eta_sigma_n = r.equalities.xi_2eta_sigma_n;
  return t;
}

ForestCondition forest_condition(const Graph& g, const SolverLimits& limits) {
  require_ke(g, limits, "forest condition");
  const auto omega = enumerate_maximum_stable_sets(g, limits);
  const VertexSet all = VertexSet::range(g.order());
  for (const auto& s : omega.omega) {
    EdgeSet cut = cut_edges(g, s, all.minus(s));
    if (spans_forest(g, cut)) return ForestCondition{true, s, std::move(cut)};
  }
  return ForestCondition{};
}

}  // namespace kegraph
