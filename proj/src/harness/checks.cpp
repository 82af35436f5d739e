#include "kegraph/harness/checks.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "../bitgraph.hpp"
#include "kegraph/criticality.hpp"
#include "kegraph/edge_list.hpp"
#include "kegraph/ke_analysis.hpp"

namespace kegraph::harness {

namespace {

struct Outcome {
  CheckStatus status;
  std::string text;
};

Outcome pass() { return {CheckStatus::kPass, {}}; }
Outcome fail(std::string why) { return {CheckStatus::kFail, std::move(why)}; }
Outcome not_applicable(std::string why) { return {CheckStatus::kNotApplicable, std::move(why)}; }

std::string show(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  const char* sep = "";
  for (Vertex v : s) {
    out << sep << v;
    sep = ",";
  }
  out << '}';
  return out.str();
}

std::string show(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

std::string show(const EdgeSet& s) {
  std::ostringstream out;
  out << '{';
  const char* sep = "";
  for (const auto& e : s) {
    out << sep << show(e);
    sep = ",";
  }
  out << '}';
  return out.str();
}

std::string show_params(GraphFacts& f) {
  std::ostringstream out;
  out << "n=" << f.n() << " alpha=" << f.alpha() << " mu=" << f.mu() << " xi=" << f.xi() << " sigma=" << f.sigma()
      << " eta=" << f.eta();
  return out.str();
}

// Guards shared by many checks.
std::optional<Outcome> need_ke(GraphFacts& f) {
  if (!f.is_ke()) return not_applicable("not a König-Egerváry graph");
  return std::nullopt;
}

std::optional<Outcome> need_proper(GraphFacts& f) {
  if (!f.is_proper_graph()) return not_applicable("not connected with at least one edge");
  return std::nullopt;
}

std::optional<Outcome> need_tree(GraphFacts& f, int min_order = 1) {
  if (!f.is_tree()) return not_applicable("not a tree");
  if (f.n() < min_order) return not_applicable("tree on fewer than " + std::to_string(min_order) + " vertices");
  return std::nullopt;
}

// Parities of simple-path lengths from `from` to `to` inside `allowed`,
// as bit 0 (even) / bit 1 (odd). Exhaustive over simple paths, memoized on
// (vertex, visited set).
class PathParity {
 public:
  PathParity(const Graph& g, detail::Mask allowed, Vertex to)
      : bg_(g), n_(g.order()), allowed_(allowed), to_(to), memo_(static_cast<std::size_t>(n_) << n_, 0xFF) {}

  int from(Vertex v) { return visit(v, detail::bit(v)); }

 private:
  int visit(Vertex v, detail::Mask visited) {
    if (v == to_) return 1;
    auto& slot = memo_[(static_cast<std::size_t>(v) << n_) | visited];
    if (slot != 0xFF) return slot;
    int parities = 0;
    for (detail::Mask r = bg_.neighbors(v) & allowed_ & ~visited; r && parities != 3; r &= r - 1) {
      const Vertex w = detail::lowest(r);
      const int sub = visit(w, visited | detail::bit(w));
      parities |= ((sub & 1) << 1) | ((sub & 2) >> 1);
    }
    slot = static_cast<std::uint8_t>(parities);
    return parities;
  }

  detail::BitGraph bg_;
  int n_;
  detail::Mask allowed_;
  Vertex to_;
  std::vector<std::uint8_t> memo_;
};

// Finds a maximal matching of g using only edges from `pool`, if any.
std::optional<EdgeSet> maximal_matching_within(const Graph& g, const EdgeSet& pool) {
  const auto& edges = pool.vec();
  std::vector<Edge> chosen;
  std::optional<EdgeSet> found;
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (found) return;
    if (i == edges.size()) {
      EdgeSet m(chosen);
      if (is_maximal_matching(g, m)) found = m;
      return;
    }
    const Edge& e = edges[i];
    const bool free = std::none_of(chosen.begin(), chosen.end(), [&](const Edge& c) { return c.shares_endpoint(e); });
    if (free) {
      chosen.push_back(e);
      go(i + 1);
      chosen.pop_back();
    }
    go(i + 1);
  };
  go(0);
  return found;
}

Outcome check_t1i(GraphFacts& f) {
  if (auto g = need_ke(f)) return *g;
  for (const auto& e : f.alpha_critical()) {
    if (!is_koenig_egervary(delete_edge(f.graph(), e), f.limits())) {
      return fail("G-e is not König-Egerváry for alpha-critical e=" + show(e));
    }
  }
  return pass();
}

Outcome check_t1ii(GraphFacts& f) {
  if (auto g = need_ke(f)) return *g;
  const EdgeSet extra = f.alpha_critical().minus(f.mu_critical());
  if (!extra.empty()) return fail("alpha-critical but not mu-critical: " + show(extra));
  return pass();
}

Outcome check_t1iii(GraphFacts& f) {
  if (auto g = need_ke(f)) return *g;
  if (!f.alpha_critical().is_matching()) return fail("alpha-critical edges share endpoints: " + show(f.alpha_critical()));
  return pass();
}

Outcome check_ck2(GraphFacts& f) {
  if (auto g = need_proper(f)) return *g;
  if (auto g = need_ke(f)) return *g;
  const bool all_critical = static_cast<int>(f.alpha_critical().size()) == f.m();
  const bool is_k2 = f.n() == 2 && f.m() == 1;
  if (all_critical != is_k2) {
    return fail(all_critical ? "every edge alpha-critical but graph is not K2" : "K2 with a non-critical edge");
  }
  return pass();
}

Outcome check_bhp(GraphFacts& f) {
  if (f.n() > f.limits().max_odd_cycle_vertices) {
    return not_applicable("capacity: odd-cycle search limited to n<=" + std::to_string(f.limits().max_odd_cycle_vertices));
  }
  const auto& crit = f.alpha_critical().vec();
  const detail::BitGraph bg(f.graph());
  for (std::size_t i = 0; i < crit.size(); ++i) {
    for (std::size_t j = i + 1; j < crit.size(); ++j) {
      const Edge& e1 = crit[i];
      const Edge& e2 = crit[j];
      if (!e1.shares_endpoint(e2)) continue;
      const Vertex y = e1.touches(e2.u) ? e2.u : e2.v;
      const Vertex x = e1.other(y);
      const Vertex z = e2.other(y);
      // Cycle y-x ... z-y is odd iff the x..z path avoiding y is odd.
      PathParity parity(f.graph(), bg.all() & ~detail::bit(y), z);
      if (!(parity.from(x) & 2)) {
        return fail("incident alpha-critical edges " + show(e1) + " and " + show(e2) + " lie on no common odd cycle");
      }
    }
  }
  return pass();
}

Outcome check_p3(GraphFacts& f) {
  if (!f.is_bipartite()) return not_applicable("not bipartite");
  if (f.alpha_critical() != f.mu_critical()) {
    return fail("alpha-critical " + show(f.alpha_critical()) + " != mu-critical " + show(f.mu_critical()));
  }
  return pass();
}

Outcome check_p3_unguarded(GraphFacts& f) {
  const EdgeSet extra = f.alpha_critical().minus(f.mu_critical());
  if (!extra.empty()) return fail("alpha-critical but not mu-critical: " + show(extra));
  return pass();
}

Outcome check_c4(GraphFacts& f) {
  if (auto g = need_tree(f, 2)) return *g;
  const bool has_pm = f.perfect_matchings().count != PerfectMatchingCount::kNone;
  const bool maximal = is_maximal_matching(f.graph(), f.alpha_critical());
  if (has_pm != maximal) {
    return fail(std::string("perfect matching ") + (has_pm ? "exists" : "absent") +
                " but alpha-critical edges " + (maximal ? "form" : "do not form") + " a maximal matching");
  }
  return pass();
}

Outcome check_l1(GraphFacts& f) {
  const bool has_pm = f.perfect_matchings().count != PerfectMatchingCount::kNone;
  if (!has_pm && !f.is_ke()) return not_applicable("no perfect matching and not König-Egerváry");
  if (has_pm && f.is_ke() != (f.alpha() == f.mu())) {
    return fail("graph with a perfect matching: KE=" + std::to_string(f.is_ke()) + " but " + show_params(f));
  }
  if (f.is_ke() && f.mu() > f.alpha()) return fail("KE graph with mu > alpha: " + show_params(f));
  return pass();
}

Outcome check_c3(GraphFacts& f) {
  if (auto g = need_tree(f, 2)) return *g;
  const auto& pm = f.perfect_matchings();
  if (pm.count == PerfectMatchingCount::kNone) return not_applicable("tree without a perfect matching");
  const EdgeSet& m = pm.witnesses.front().edges();
  if (!m.is_subset_of(f.alpha_critical())) {
    return fail("perfect matching edges not alpha-critical: " + show(m.minus(f.alpha_critical())));
  }
  if (2 * f.alpha() != f.n()) return fail("2*alpha != n: " + show_params(f));
  return pass();
}

Outcome meets_once(GraphFacts& f, const EdgeSet& edges, const char* kind) {
  if (auto g = need_ke(f)) return *g;
  for (const auto& s : f.omega().omega) {
    for (const auto& e : edges) {
      if (s.contains(e.u) == s.contains(e.v)) {
        return fail("maximum stable set " + show(s) + " meets " + kind + " edge " + show(e) + " in " +
                    (s.contains(e.u) ? "two vertices" : "no vertex"));
      }
    }
  }
  return pass();
}

Outcome check_p5i(GraphFacts& f) { return meets_once(f, f.is_ke() ? f.mu_critical() : EdgeSet{}, "mu-critical"); }
Outcome check_p5ii(GraphFacts& f) { return meets_once(f, f.is_ke() ? f.alpha_critical() : EdgeSet{}, "alpha-critical"); }

Outcome check_p5iii(GraphFacts& f) {
  if (auto g = need_proper(f)) return *g;
  if (auto g = need_ke(f)) return *g;
  if (f.alpha_critical().size() > 24) return not_applicable("capacity: too many alpha-critical edges to search");
  const auto m = maximal_matching_within(f.graph(), f.alpha_critical());
  if (!m) return pass();
  const auto& pm = f.perfect_matchings();
  if (!pm.unique()) return fail("maximal matching " + show(*m) + " of alpha-critical edges, but no unique perfect matching");
  if (pm.witnesses.front().edges() != *m) {
    return fail("maximal matching " + show(*m) + " of alpha-critical edges differs from the unique perfect matching");
  }
  return pass();
}

Outcome check_nc(GraphFacts& f) {
  const VertexSet nc = neighborhood(f.graph(), f.core(), false);
  if (!nc.is_subset_of(f.anticore())) {
    return fail("N(core)=" + show(nc) + " is not inside anticore=" + show(f.anticore()));
  }
  if (f.is_ke() && nc != f.anticore()) {
    return fail("KE graph with N(core)=" + show(nc) + " != anticore=" + show(f.anticore()));
  }
  return pass();
}

Outcome check_p9i(GraphFacts& f) {
  if (auto g = need_ke(f)) return *g;
  const VertexSet nc = neighborhood(f.graph(), f.core(), false);
  if (f.core().size() < nc.size()) return fail("|core|=" + std::to_string(f.core().size()) + " < |N(core)|=" + std::to_string(nc.size()));
  return pass();
}

Outcome check_p9ii(GraphFacts& f) {
  if (auto g = need_ke(f)) return *g;
  const VertexSet all = VertexSet::range(f.n());
  const VertexSet nc = neighborhood(f.graph(), f.core(), false);
  for (const auto& s : f.omega().omega) {
    const auto left = s.minus(f.core()).size();
    const auto right = all.minus(s).minus(nc).size();
    if (left != right) return fail("S=" + show(s) + ": |S-core|=" + std::to_string(left) + " != |V-S-N(core)|=" + std::to_string(right));
  }
  return pass();
}

Outcome check_p9iii(GraphFacts& f) {
  if (auto g = need_ke(f)) return *g;
  GraphFacts& g0 = f.g0_facts();
  if (g0.perfect_matchings().count == PerfectMatchingCount::kNone) return fail("G0 has no perfect matching");
  if (!g0.is_ke()) return fail("G0 is not König-Egerváry");
  return pass();
}

Outcome check_c2(GraphFacts& f) {
  if (auto g = need_ke(f)) return *g;
  if (f.alpha() + f.sigma() != f.mu() + f.xi()) return fail("alpha+sigma != mu+xi: " + show_params(f));
  return pass();
}

Outcome check_l6i(GraphFacts& f) {
  const VertexSet closed = neighborhood(f.graph(), f.core(), true);
  for (const auto& e : f.alpha_critical()) {
    if (closed.contains(e.u) || closed.contains(e.v)) return fail("alpha-critical edge " + show(e) + " touches N[core]");
  }
  return pass();
}

Outcome check_l6ii(GraphFacts& f) {
  GraphFacts& g0 = f.g0_facts();
  if (f.alpha() != g0.alpha() + f.xi()) {
    return fail("alpha(G)=" + std::to_string(f.alpha()) + " != alpha(G0)+xi=" + std::to_string(g0.alpha() + f.xi()));
  }
  if (!g0.core().empty()) return fail("core(G0)=" + show(f.g0().lift(g0.core())) + " is not empty");
  const VertexSet kept(f.g0().to_parent);
  std::vector<VertexSet> restricted;
  for (const auto& s : f.omega().omega) restricted.push_back(s.intersect(kept));
  std::sort(restricted.begin(), restricted.end());
  restricted.erase(std::unique(restricted.begin(), restricted.end()), restricted.end());
  std::vector<VertexSet> lifted;
  for (const auto& s : g0.omega().omega) lifted.push_back(f.g0().lift(s));
  std::sort(lifted.begin(), lifted.end());
  if (restricted != lifted) return fail("Omega(G0) differs from the restrictions of Omega(G) to V(G0)");
  return pass();
}

Outcome check_l6iii(GraphFacts& f) {
  const EdgeSet lifted = f.g0().lift(f.g0_facts().alpha_critical());
  if (lifted != f.alpha_critical()) {
    return fail("alpha-critical(G)=" + show(f.alpha_critical()) + " but alpha-critical(G0) maps to " + show(lifted));
  }
  return pass();
}

Outcome inequalities(GraphFacts& f) {
  if (f.xi() + f.eta() > f.alpha()) return fail("xi+eta > alpha: " + show_params(f));
  if (f.sigma() + f.eta() > f.mu()) return fail("sigma+eta > mu: " + show_params(f));
  if (f.xi() + 2 * f.eta() + f.sigma() > f.n()) return fail("xi+2eta+sigma > n: " + show_params(f));
  return pass();
}

Outcome check_p7(GraphFacts& f) {
  if (auto g = need_ke(f)) return *g;
  return inequalities(f);
}

Outcome check_p7_unguarded(GraphFacts& f) { return inequalities(f); }

Outcome check_p10(GraphFacts& f) {
  if (auto g = need_ke(f)) return *g;
  const auto eq = f.equalities();
  if (eq.xi_eta_alpha != eq.sigma_eta_mu || eq.sigma_eta_mu != eq.xi_2eta_sigma_n) {
    return fail("equalities disagree: " + show_params(f));
  }
  return pass();
}

Outcome check_l3(GraphFacts& f) {
  if (auto g = need_ke(f)) return *g;
  GraphFacts& g0 = f.g0_facts();
  const auto& pm = g0.perfect_matchings();
  if (!pm.unique()) return not_applicable("G0 has no unique perfect matching");
  if (g0.alpha_critical() != g0.mu_critical()) {
    return fail("in G0 alpha-critical " + show(g0.alpha_critical()) + " != mu-critical " + show(g0.mu_critical()));
  }
  // Each matching edge must be certified by the S0 construction from its B end.
  const Matching& m = pm.witnesses.front();
  const VertexSet a_side = smallest_maximum_stable_set(g0.graph(), f.limits());
  for (const auto& e : m.edges()) {
    const Vertex b = a_side.contains(e.u) ? e.v : e.u;
    try {
      const auto trace = s0_procedure(g0.graph(), m, a_side, b, f.limits());
      if (!g0.alpha_critical().contains(trace.target_edge)) {
        return fail("S0 certifies " + show(trace.target_edge) + " but it is not alpha-critical in G0");
      }
    } catch (const PreconditionError& ex) {
      return fail(std::string("S0 procedure rejected its input: ") + ex.what());
    }
  }
  return pass();
}

Outcome check_t2(GraphFacts& f) {
  if (auto g = need_ke(f)) return *g;
  const auto t = th2_evaluate(f.graph(), f.limits());
  if (!t.consistent()) {
    std::ostringstream out;
    out << "clauses disagree: (i)=" << t.g0_unique_perfect_matching << " (ii)=" << t.g0_alpha_critical_maximal_matching
        << " (iii)=" << t.xi_eta_alpha << " (iv)=" << t.sigma_eta_mu << " (v)=" << t.xi_2eta_sigma_n;
    return fail(out.str());
  }
  return pass();
}

Outcome check_c6(GraphFacts& f) {
  if (auto g = need_proper(f)) return *g;
  if (!f.is_bipartite()) return not_applicable("not bipartite");
  const bool i = f.perfect_matchings().unique();
  const bool ii = is_maximal_matching(f.graph(), f.alpha_critical());
  const bool iii = f.eta() == f.alpha();
  const bool iv = f.eta() == f.mu();
  const bool v = 2 * f.eta() == f.n();
  if (!(i == ii && ii == iii && iii == iv && iv == v)) {
    std::ostringstream out;
    out << "clauses disagree: (i)=" << i << " (ii)=" << ii << " (iii)=" << iii << " (iv)=" << iv << " (v)=" << v;
    return fail(out.str());
  }
  if (f.perfect_matchings().count != PerfectMatchingCount::kNone && f.xi() != 0) {
    return fail("bipartite graph with a perfect matching has nonempty core " + show(f.core()));
  }
  return pass();
}

Outcome check_p4(GraphFacts& f) {
  if (auto g = need_ke(f)) return *g;
  const auto fc = forest_condition(f.graph(), f.limits());
  if (!fc.holds) return pass();
  const auto eq = f.equalities();
  if (!(eq.xi_eta_alpha && eq.sigma_eta_mu && eq.xi_2eta_sigma_n)) {
    return fail("cut of S=" + show(*fc.witness) + " is a forest but the equalities fail: " + show_params(f));
  }
  return pass();
}

Outcome check_c1(GraphFacts& f) {
  if (auto g = need_tree(f)) return *g;
  const auto eq = f.equalities();
  if (!(eq.xi_eta_alpha && eq.sigma_eta_mu && eq.xi_2eta_sigma_n)) return fail("tree equalities fail: " + show_params(f));
  return pass();
}

Outcome check_c5(GraphFacts& f) {
  if (auto g = need_tree(f)) return *g;
  const VertexSet ends = f.alpha_critical().endpoints();
  for (Vertex v = 0; v < f.n(); ++v) {
    const bool some_not_all = !f.core().contains(v) && !f.anticore().contains(v);
    if (some_not_all != ends.contains(v)) {
      return fail("vertex " + std::to_string(v) + (some_not_all ? " is in some but not all maximum stable sets yet "
                                                                  : " is in all or no maximum stable sets yet ") +
                  (ends.contains(v) ? "ends" : "does not end") + " an alpha-critical edge");
    }
  }
  return pass();
}

Outcome check_h1(GraphFacts& f) {
  bool every_outside_vertex_doubly_covered = true;
  std::string where;
  for (const auto& s : f.omega().omega) {
    for (Vertex x = 0; x < f.n() && every_outside_vertex_doubly_covered; ++x) {
      if (s.contains(x)) continue;
      int hits = 0;
      for (Vertex w : f.graph().neighbors(x)) hits += s.contains(w) ? 1 : 0;
      if (hits < 2) {
        every_outside_vertex_doubly_covered = false;
        where = "S=" + show(s) + ", x=" + std::to_string(x);
      }
    }
    if (!every_outside_vertex_doubly_covered) break;
  }
  if ((f.eta() == 0) != every_outside_vertex_doubly_covered) {
    return fail("eta=" + std::to_string(f.eta()) + " but the neighborhood condition " +
                (every_outside_vertex_doubly_covered ? "holds" : "fails at " + where));
  }
  return pass();
}

struct Entry {
  CheckInfo info;
  Outcome (*run)(GraphFacts&);
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = {
      {{"T1i", "KE: deleting an alpha-critical edge leaves a KE graph"}, check_t1i},
      {{"T1ii", "KE: alpha-critical edges are mu-critical"}, check_t1ii},
      {{"T1iii", "KE: alpha-critical edges form a matching"}, check_t1iii},
      {{"CK2", "connected KE: every edge alpha-critical iff the graph is K2"}, check_ck2},
      {{"BHP", "incident alpha-critical edges lie on a common odd cycle"}, check_bhp},
      {{"P3", "bipartite: alpha-critical edges equal mu-critical edges"}, check_p3},
      {{"C4", "tree: perfect matching exists iff alpha-critical edges form a maximal matching"}, check_c4},
      {{"L1", "perfect matching: KE iff alpha=mu; KE: mu<=alpha"}, check_l1},
      {{"C3", "tree with perfect matching M: M is alpha-critical and 2alpha=n"}, check_c3},
      {{"P5i", "KE: every maximum stable set meets each mu-critical edge once"}, check_p5i},
      {{"P5ii", "KE: every maximum stable set meets each alpha-critical edge once"}, check_p5ii},
      {{"P5iii", "connected KE: a maximal matching of alpha-critical edges is the unique perfect matching"}, check_p5iii},
      {{"NC", "N(core) inside anticore; equal for KE"}, check_nc},
      {{"P9i", "KE: |core| >= |N(core)|"}, check_p9i},
      {{"P9ii", "KE: |S-core| = |V-S-N(core)| for every maximum stable set S"}, check_p9ii},
      {{"P9iii", "KE: G0 has a perfect matching and is KE"}, check_p9iii},
      {{"C2", "KE: alpha+sigma = mu+xi"}, check_c2},
      {{"L6i", "no alpha-critical edge touches N[core]"}, check_l6i},
      {{"L6ii", "alpha(G)=alpha(G0)+xi, core(G0) empty, Omega(G0) = restrictions of Omega(G)"}, check_l6ii},
      {{"L6iii", "alpha-critical edges of G and G0 coincide"}, check_l6iii},
      {{"P7", "KE: xi+eta<=alpha, sigma+eta<=mu, xi+2eta+sigma<=n"}, check_p7},
      {{"P10", "KE: the three parameter equalities are equivalent"}, check_p10},
      {{"L3", "KE with unique perfect matching in G0: alpha-critical = mu-critical in G0"}, check_l3},
      {{"T2", "KE: the five clauses on G0 and the parameters are equivalent"}, check_t2},
      {{"C6", "connected bipartite: unique PM, maximal alpha-critical matching, eta=alpha, eta=mu, 2eta=n equivalent"},
       check_c6},
      {{"P4", "KE with a forest cut for some maximum stable set: the three equalities hold"}, check_p4},
      {{"C1", "tree: xi+eta=alpha, sigma+eta=mu, xi+2eta+sigma=n"}, check_c1},
      {{"C5", "tree: v in some but not all maximum stable sets iff v ends an alpha-critical edge"}, check_c5},
      {{"H1", "eta=0 iff |N(x) ∩ S| >= 2 for every maximum stable set S and x outside S"}, check_h1},
      {{"P7-unguarded", "parameter inequalities without the KE hypothesis", true}, check_p7_unguarded},
      {{"P3-unguarded", "alpha-critical implies mu-critical without the bipartite hypothesis", true},
       check_p3_unguarded},
  };
  return all;
}

const Entry* find_entry(std::string_view id) {
  for (const auto& e : entries()) {
    if (e.info.id == id) return &e;
  }
  return nullptr;
}

}  // namespace

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kNotApplicable: return "na";
  }
  return "unknown";
}

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

std::vector<std::string> default_check_ids() {
  std::vector<std::string> out;
  for (const auto& info : check_catalog()) {
    if (!info.negative_control) out.push_back(info.id);
  }
  return out;
}

bool is_known_check(std::string_view id) { return find_entry(id) != nullptr; }

std::vector<std::string> parse_check_list(std::string_view csv) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    const std::size_t comma = std::min(csv.find(',', start), csv.size());
    std::string id(csv.substr(start, comma - start));
    id.erase(0, id.find_first_not_of(' '));
    id.erase(id.find_last_not_of(' ') + 1);
    if (!id.empty()) {
      if (!is_known_check(id)) throw InputError("unknown check id '" + id + "'");
      out.push_back(std::move(id));
    }
    start = comma + 1;
  }
  if (out.empty()) throw InputError("empty check list");
  return out;
}

CheckVerdict check(GraphFacts& facts, std::string_view id) {
  const Entry* entry = find_entry(id);
  if (!entry) throw InputError("unknown check id '" + std::string(id) + "'");
  CheckVerdict v;
  v.check_id = entry->info.id;
  Outcome o;
  try {
    o = entry->run(facts);
  } catch (const CapacityError& ex) {
    o = not_applicable(std::string("capacity: ") + ex.what());
  } catch (const PreconditionError& ex) {
    o = not_applicable(ex.what());
  } catch (const InternalError& ex) {
    o = fail(ex.what());
  }
  v.status = o.status;
  v.detail = std::move(o.text);
  if (v.status == CheckStatus::kFail) v.witness = format_edge_list(facts.graph());
  return v;
}

CheckVerdict check(const Graph& g, std::string_view id, const SolverLimits& limits) {
  GraphFacts facts(g, limits);
  return check(facts, id);
}

Graph shrink_failure(const Graph& g, std::string_view id, const SolverLimits& limits) {
  auto fails = [&](const Graph& h) { return check(h, id, limits).status == CheckStatus::kFail; };
  Graph cur = g;
  for (bool progress = true; progress;) {
    progress = false;
    for (const auto& e : cur.edges()) {
      Graph next = delete_edge(cur, e);
      if (fails(next)) {
        cur = std::move(next);
        progress = true;
        break;
      }
    }
    if (progress) continue;
    for (Vertex v = 0; v < cur.order(); ++v) {
      Graph next = delete_vertices(cur, VertexSet{v}).graph;
      if (fails(next)) {
        cur = std::move(next);
        progress = true;
        break;
      }
    }
  }
  return cur;
}

}  // namespace kegraph::harness
