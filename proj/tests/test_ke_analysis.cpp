#include <doctest.h>

#include <random>

#include "frozen.hpp"
#include "kegraph/harness/fixtures.hpp"
#include "kegraph/harness/generators.hpp"
#include "kegraph/ke_analysis.hpp"
#include "kegraph/reports.hpp"
#include "kegraph/stable_sets.hpp"
#include "oracle.hpp"

using namespace kegraph;
using harness::fixture;

TEST_CASE("parameter reports of the fixtures") {
  for (const auto& row : frozen::rows()) {
    CAPTURE(row.fixture);
    const auto r = parameter_report(fixture(row.fixture).graph);
    CHECK(r.n == row.n);
    CHECK(r.m == row.m);
    CHECK(r.alpha == row.alpha);
    CHECK(r.mu == row.mu);
    CHECK(r.xi == row.xi);
    CHECK(r.sigma == row.sigma);
    CHECK(r.eta == row.eta);
    CHECK(r.is_ke == row.ke);
    CHECK(r.core.vec() == row.core);
    CHECK(r.anticore.vec() == row.anticore);
    CHECK(r.equalities.xi_eta_alpha == row.equalities);
    CHECK(r.equalities.sigma_eta_mu == row.equalities);
    CHECK(r.equalities.xi_2eta_sigma_n == row.equalities);
  }
}

TEST_CASE("W1 breaks the parameter inequalities") {
  const auto r = parameter_report(fixture("w1").graph);
  CHECK_FALSE(r.is_ke);
  CHECK(r.xi + r.eta > r.alpha);
  CHECK(r.sigma + r.eta > r.mu);
}

TEST_CASE("KE recognition") {
  CHECK(is_koenig_egervary(fixture("k3_plus_e").graph));
  CHECK(is_koenig_egervary(fixture("fig2_ke_nonbipartite").graph));
  CHECK_FALSE(is_koenig_egervary(harness::cycle_graph(5)));
  CHECK_FALSE(is_koenig_egervary(fixture("w1").graph));
  CHECK(is_koenig_egervary(Graph::from_edge_list(0, {})));
  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    const Graph g = oracle::random_graph(rng, static_cast<int>(rng() % 10), 0.3);
    CHECK(is_koenig_egervary(g) == oracle::Brute(g).ke());
  }
}

TEST_CASE("KE decomposition") {
  const Graph g = fixture("k3_plus_e").graph;
  const auto d = ke_decompose(g);
  CHECK(d.s == VertexSet{1, 3});
  CHECK(d.h_vertices == VertexSet{0, 2});
  CHECK(d.cut_matching.size() == 2);
  CHECK(d.cut_matching.edges().is_subset_of(cut_edges(g, d.s, d.h_vertices)));
  CHECK_THROWS_AS(ke_decompose(harness::cycle_graph(5)), PreconditionError);
  try {
    ke_decompose(harness::cycle_graph(5));
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("not a König-Egerváry graph") != std::string::npos);
  }
}

TEST_CASE("KE decomposition on random KE graphs") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    harness::GeneratorConfig cfg{harness::GeneratorKind::kKeSynth, static_cast<int>(seed % 13), 0, 0.4, seed};
    const Graph g = harness::generate(cfg);
    const auto d = ke_decompose(g);
    CHECK(is_stable(g, d.s));
    CHECK(static_cast<int>(d.s.size()) == stability_number(g));
    CHECK(d.cut_matching.size() == d.h_vertices.size());
  }
}

TEST_CASE("G0 removes the closed neighborhood of the core") {
  const auto g0 = g_zero(fixture("k3_plus_e").graph);
  CHECK(g0.to_parent == std::vector<Vertex>{1, 2});
  CHECK(g0.graph.size() == 1);
  const auto same = g_zero(fixture("fig7_g0").graph);
  CHECK(same.graph == fixture("fig7_g0").graph);
}

TEST_CASE("S0 construction on the unique-matching graph") {
  const auto& f = fixture("fig7_g0");
  const Graph& g = f.graph;
  const auto pm = perfect_matching_status(g);
  REQUIRE(pm.unique());
  const VertexSet a{f.id("a1"), f.id("a2"), f.id("a3"), f.id("a4"), f.id("a5")};
  const auto b = [&](const char* l) { return f.id(l); };

  const auto t = s0_procedure(g, pm.witnesses.front(), a, b("b1"));
  REQUIRE(t.steps.size() == 3);
  CHECK(t.steps[0].s0 == VertexSet{b("b1")});
  CHECK(t.steps[0].d == VertexSet{b("b1")});
  CHECK(t.steps[1].s0 == VertexSet{b("b1"), b("b2"), b("b3")});
  CHECK(t.steps[1].d == VertexSet{b("b2"), b("b3")});
  CHECK(t.steps[2].s0 == VertexSet{b("b1"), b("b2"), b("b3"), b("b4")});
  CHECK(t.steps[2].d == VertexSet{b("b4")});
  CHECK(t.s0 == VertexSet{b("b1"), b("b2"), b("b3"), b("b4"), f.id("a5")});
  CHECK(t.target_edge == make_edge(f.id("a1"), b("b1")));

  // Every matching edge is certified from its B end.
  for (const char* label : {"b1", "b2", "b3", "b4", "b5"}) {
    const auto tr = s0_procedure(g, pm.witnesses.front(), a, b(label));
    CHECK(tr.s0.contains(b(label)));
    CHECK(is_stable(g, tr.s0));
  }
}

TEST_CASE("S0 construction rejects bad input") {
  const auto& f = fixture("fig7_g0");
  const Graph& g = f.graph;
  const Matching pm = perfect_matching_status(g).witnesses.front();
  const VertexSet a = VertexSet::range(5);
  CHECK_THROWS_AS(s0_procedure(g, pm, a, f.id("a1")), PreconditionError);
  CHECK_THROWS_AS(s0_procedure(g, pm, a, 42), PreconditionError);
  CHECK_THROWS_AS(s0_procedure(g, pm, VertexSet{0, 1, 2, 3, 9}, f.id("b1")), PreconditionError);
  CHECK_THROWS_AS(s0_procedure(g, Matching(EdgeSet{Edge{0, 5}}), a, f.id("b1")), PreconditionError);
  const Graph c4 = harness::cycle_graph(4);
  const Matching c4pm(EdgeSet{Edge{0, 1}, Edge{2, 3}});
  CHECK_THROWS_AS(s0_procedure(c4, c4pm, VertexSet{0, 2}, 1), PreconditionError);
}

TEST_CASE("five-way evaluation") {
  const auto fig7 = th2_evaluate(fixture("fig7_g0").graph);
  CHECK(fig7.consistent());
  CHECK(fig7.g0_unique_perfect_matching);
  const auto fig8 = th2_evaluate(fixture("fig8_bipartite").graph);
  CHECK(fig8.consistent());
  CHECK_FALSE(fig8.g0_unique_perfect_matching);
  CHECK_THROWS_AS(th2_evaluate(fixture("w1").graph), PreconditionError);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    harness::GeneratorConfig cfg{harness::GeneratorKind::kKeSynth, 1 + static_cast<int>(seed % 12), 0, 0.35, seed};
    CHECK(th2_evaluate(harness::generate(cfg)).consistent());
  }
}

TEST_CASE("forest condition") {
  const auto& f = fixture("fig9_forest");
  const auto yes = forest_condition(f.graph);
  REQUIRE(yes.holds);
  CHECK(spans_forest(f.graph, yes.cut));
  const auto no = forest_condition(fixture("fig9_counterexample").graph);
  CHECK_FALSE(no.holds);
  CHECK_FALSE(no.witness.has_value());
  CHECK(parameter_report(fixture("fig9_counterexample").graph).equalities.xi_2eta_sigma_n);
  CHECK_THROWS_AS(forest_condition(harness::cycle_graph(5)), PreconditionError);
}

TEST_CASE("JSON and DOT views") {
  const auto r = parameter_report(fixture("k3_plus_e").graph);
  const auto j = to_json(r);
  CHECK(j["alpha"] == 2);
  CHECK(j["mu"] == 2);
  CHECK(j["is_ke"] == true);
  CHECK(j["g0_pm_status"] == 1);
  CHECK(j["core"] == nlohmann::json::array({3}));
  CHECK(j["mu_critical_edges"] == nlohmann::json::parse("[[0,3],[1,2]]"));
  CHECK(j["equalities"]["xi_eta_alpha"] == true);
  CHECK(j.dump() == to_json(parameter_report(fixture("k3_plus_e").graph)).dump());

  const std::string dot = to_dot(fixture("k3_plus_e").graph, r.core, r.alpha_critical_edges, r.mu_critical_edges);
  CHECK(dot.rfind("graph ", 0) == 0);
  CHECK(dot.find("3 [class=core]") != std::string::npos);
  CHECK(dot.find("1 -- 2 [class=\"alpha_critical mu_critical\"]") != std::string::npos);
  CHECK(dot.find("0 -- 3 [class=mu_critical]") != std::string::npos);
  CHECK(dot.find("0 -- 1;") != std::string::npos);
}

TEST_CASE("KE invariants on random KE graphs") {
  for (std::uint64_t seed = 1000; seed < 1300; ++seed) {
    harness::GeneratorConfig cfg{harness::GeneratorKind::kKeSynth, 1 + static_cast<int>(seed % 12), 0, 0.3, seed};
    const Graph g = harness::generate(cfg);
    const auto r = parameter_report(g);
    const oracle::Brute b(g);
    CHECK(r.alpha == b.alpha());
    CHECK(r.mu == b.mu());
    CHECK(r.is_ke);
    CHECK(r.mu <= r.alpha);
    CHECK(r.alpha + r.sigma == r.mu + r.xi);
    CHECK(neighborhood(g, r.core, false) == r.anticore);
    CHECK(r.alpha_critical_edges.is_matching());
    CHECK(r.alpha_critical_edges.is_subset_of(r.mu_critical_edges));
  }
}
