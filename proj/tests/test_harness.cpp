#include <doctest.h>

#include <map>
#include <set>

#include "kegraph/edge_list.hpp"
#include "kegraph/harness/checks.hpp"
#include "kegraph/harness/fixtures.hpp"
#include "kegraph/harness/fuzz.hpp"
#include "kegraph/harness/generators.hpp"
#include "kegraph/ke_analysis.hpp"

using namespace kegraph;
using namespace kegraph::harness;

namespace {

GeneratorConfig config(GeneratorKind kind, int n, double p, std::uint64_t seed, int n2 = 0) {
  GeneratorConfig c;
  c.kind = kind;
  c.n = n;
  c.n2 = n2;
  c.p = p;
  c.seed = seed;
  return c;
}

}  // namespace

TEST_CASE("random trees") {
  for (int n = 1; n <= 16; ++n) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Graph t = generate(config(GeneratorKind::kTree, n, 0, seed));
      CHECK(t.order() == n);
      CHECK(static_cast<int>(t.size()) == n - 1);
      CHECK(is_tree(t));
    }
  }
  CHECK(generate(config(GeneratorKind::kTree, 0, 0, 1)).order() == 0);
}

TEST_CASE("Pruefer decoding") {
  const std::vector<int> seq{3, 3, 3, 4};
  const Graph t = tree_from_pruefer(seq);
  CHECK(t.edge_set() == EdgeSet{Edge{0, 3}, Edge{1, 3}, Edge{2, 3}, Edge{3, 4}, Edge{4, 5}});
  const std::vector<int> bad{7};
  CHECK_THROWS_AS(tree_from_pruefer(bad), InputError);
  CHECK(tree_from_pruefer(std::vector<int>{}).size() == 1);
}

TEST_CASE("tree generator covers every labeled tree on four vertices") {
  // Cayley: 4^2 = 16 labeled trees.
  std::set<std::vector<Edge>> seen;
  for (std::uint64_t seed = 0; seed < 2000; ++seed) seen.insert(generate(config(GeneratorKind::kTree, 4, 0, seed)).edges());
  CHECK(seen.size() == 16);
}

TEST_CASE("ke_synth output is always KE") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Graph g = generate(config(GeneratorKind::kKeSynth, static_cast<int>(seed % 15), 0.1 * (seed % 11), seed));
    CHECK(is_koenig_egervary(g));
  }
}

TEST_CASE("gnp and bipartite extremes") {
  CHECK(generate(config(GeneratorKind::kGnp, 9, 0.0, 3)).size() == 0);
  CHECK(generate(config(GeneratorKind::kGnp, 9, 1.0, 3)) == complete_graph(9));
  CHECK(generate(config(GeneratorKind::kBipartite, 3, 1.0, 3, 4)).size() == 12);
  CHECK(is_bipartite(generate(config(GeneratorKind::kBipartite, 5, 0.6, 8, 6))));
  CHECK(generate(config(GeneratorKind::kCycle, 5, 0, 0)) == cycle_graph(5));
  CHECK(generate(config(GeneratorKind::kPath, 5, 0, 0)) == path_graph(5));
}

TEST_CASE("generators are deterministic per seed") {
  for (auto kind : {GeneratorKind::kTree, GeneratorKind::kKeSynth, GeneratorKind::kGnp, GeneratorKind::kBipartite}) {
    const auto c = config(kind, 10, 0.4, 99, 4);
    CHECK(generate(c) == generate(c));
  }
  CHECK(generate(config(GeneratorKind::kGnp, 12, 0.5, 1)) != generate(config(GeneratorKind::kGnp, 12, 0.5, 2)));
}

TEST_CASE("generator validation") {
  CHECK_THROWS_AS(generate(config(GeneratorKind::kGnp, 5, 1.5, 0)), InputError);
  CHECK_THROWS_AS(generate(config(GeneratorKind::kGnp, 5, -0.1, 0)), InputError);
  CHECK_THROWS_AS(generate(config(GeneratorKind::kGnp, -1, 0.5, 0)), InputError);
  CHECK_THROWS_AS(generate(config(GeneratorKind::kCycle, 2, 0.5, 0)), InputError);
  CHECK_THROWS_AS(generate(config(GeneratorKind::kGnp, 65, 0.5, 0)), InputError);
  CHECK(parse_generator_kind("ke") == GeneratorKind::kKeSynth);
  CHECK(parse_generator_kind("ke_synth") == GeneratorKind::kKeSynth);
  CHECK_FALSE(parse_generator_kind("petersen").has_value());
}

TEST_CASE("fixtures") {
  CHECK(fixture("k3_plus_e").graph.order() == 4);
  CHECK(fixture("w1").expect("alpha") == 3);
  CHECK(fixture("w1").expect("mu") == 2);
  CHECK(fixture("w1").expect("eta") == 3);
  CHECK(fixture("w1").expect("xi") == 2);
  CHECK(fixture("w1").expect("sigma") == 1);
  CHECK(fixture("fig8_bipartite").expect("mu") == 3);
  CHECK_FALSE(fixture("fig8_bipartite").notes.empty());
  CHECK_THROWS_AS(fixture("nope"), InputError);
  CHECK_THROWS_AS(fixture("w1").id("zz"), InputError);

  const auto& f = fixture("fig7_g0");
  CHECK(f.id("b1") == 5);
  const std::string text = f.to_edge_list();
  CHECK(text.find("b1=5") != std::string::npos);
  CHECK(parse_edge_list(text) == f.graph);

  std::set<std::string> names;
  for (const auto& fx : fixtures()) {
    CHECK(names.insert(fx.name).second);
    CHECK(fx.labels.size() == static_cast<std::size_t>(fx.graph.order()));
    for (const auto& e : fx.expected) {
      const auto r = parameter_report(fx.graph);
      std::map<std::string, int> actual{{"n", r.n},
                                        {"m", r.m},
                                        {"alpha", r.alpha},
                                        {"mu", r.mu},
                                        {"xi", r.xi},
                                        {"sigma", r.sigma},
                                        {"eta", r.eta},
                                        {"is_ke", r.is_ke},
                                        {"is_bipartite", r.is_bipartite},
                                        {"is_tree", r.is_tree},
                                        {"g0_pm_status", static_cast<int>(r.g0_pm_status)},
                                        {"xi_eta_alpha", r.equalities.xi_eta_alpha},
                                        {"sigma_eta_mu", r.equalities.sigma_eta_mu},
                                        {"xi_2eta_sigma_n", r.equalities.xi_2eta_sigma_n}};
      if (r.is_ke) actual["forest_condition"] = forest_condition(fx.graph).holds;
      CAPTURE(fx.name);
      CAPTURE(e.field);
      REQUIRE(actual.count(e.field));
      CHECK(actual.at(e.field) == e.value);
    }
  }
}

TEST_CASE("check catalog") {
  const auto ids = default_check_ids();
  for (const char* id : {"T1i", "T1ii", "T1iii", "CK2", "BHP", "P3", "C4", "L1", "C3", "P5i", "P5ii", "P5iii", "NC",
                         "P9i", "P9ii", "P9iii", "C2", "L6i", "L6ii", "L6iii", "P7", "P10", "L3", "T2", "C6", "P4",
                         "C1", "C5", "H1"}) {
    CHECK(std::find(ids.begin(), ids.end(), id) != ids.end());
  }
  CHECK(std::find(ids.begin(), ids.end(), "P7-unguarded") == ids.end());
  CHECK(is_known_check("P7-unguarded"));
  CHECK(parse_check_list("C1, C4,C5") == std::vector<std::string>{"C1", "C4", "C5"});
  CHECK_THROWS_AS(parse_check_list("C1,XYZ"), InputError);
  CHECK_THROWS_AS(parse_check_list(""), InputError);
  CHECK_THROWS_AS(check(complete_graph(2), "XYZ"), InputError);
}

TEST_CASE("checks on named graphs") {
  CHECK(check(cycle_graph(6), "T1iii").status == CheckStatus::kPass);
  const auto p7 = check(fixture("w1").graph, "P7");
  CHECK(p7.status == CheckStatus::kNotApplicable);
  CHECK_FALSE(p7.detail.empty());
  CHECK(check(fixture("fig7_g0").graph, "L3").status == CheckStatus::kPass);
  CHECK(check(fixture("fig7_g0").graph, "T2").status == CheckStatus::kPass);
  CHECK(check(fixture("fig9_forest").graph, "P4").status == CheckStatus::kPass);
  CHECK(check(complete_graph(2), "CK2").status == CheckStatus::kPass);
  CHECK(check(path_graph(4), "C4").status == CheckStatus::kPass);
  CHECK(check(path_graph(4), "C3").status == CheckStatus::kPass);
  CHECK(check(star_graph(3), "C3").status == CheckStatus::kNotApplicable);
  CHECK(check(cycle_graph(5), "BHP").status == CheckStatus::kPass);
  CHECK(check(complete_graph(3), "H1").status == CheckStatus::kPass);
  CHECK(check(cycle_graph(4), "H1").status == CheckStatus::kPass);
  for (const auto& info : check_catalog()) {
    if (info.negative_control) continue;
    for (const auto& fx : fixtures()) {
      CAPTURE(info.id);
      CAPTURE(fx.name);
      CHECK(check(fx.graph, info.id).status != CheckStatus::kFail);
    }
  }
}

TEST_CASE("capacity becomes NotApplicable") {
  SolverLimits tight;
  tight.max_odd_cycle_vertices = 4;
  const auto v = check(cycle_graph(5), "BHP", tight);
  CHECK(v.status == CheckStatus::kNotApplicable);
  CHECK(v.detail.rfind("capacity", 0) == 0);
  tight.max_alpha_vertices = 3;
  CHECK(check(cycle_graph(5), "C2", tight).detail.rfind("capacity", 0) == 0);
}

TEST_CASE("negative controls fail and carry a replayable witness") {
  const auto p7 = check(fixture("w1").graph, "P7-unguarded");
  CHECK(p7.status == CheckStatus::kFail);
  CHECK(parse_edge_list(p7.witness) == fixture("w1").graph);
  const auto p3 = check(complete_graph(3), "P3-unguarded");
  CHECK(p3.status == CheckStatus::kFail);
  CHECK(check(parse_edge_list(p3.witness), "P3-unguarded").status == CheckStatus::kFail);
}

TEST_CASE("shrinking keeps the failure and reaches a local minimum") {
  const Graph w1 = fixture("w1").graph;
  const Graph small = shrink_failure(w1, "P7-unguarded");
  CHECK(check(small, "P7-unguarded").status == CheckStatus::kFail);
  CHECK(small.size() <= w1.size());
  for (const auto& e : small.edges()) CHECK(check(delete_edge(small, e), "P7-unguarded").status != CheckStatus::kFail);
  for (Vertex v = 0; v < small.order(); ++v) {
    CHECK(check(delete_vertices(small, VertexSet{v}).graph, "P7-unguarded").status != CheckStatus::kFail);
  }
  // A passing graph is returned unchanged.
  CHECK(shrink_failure(path_graph(4), "C1") == path_graph(4));
}

TEST_CASE("fuzz summaries are independent of thread count") {
  Campaign c;
  c.gen = config(GeneratorKind::kGnp, 9, 0.5, 1234);
  c.n_min = 1;
  c.p_grid = {0.2, 0.5, 0.8};
  c.trials = 60;
  c.checks = {"H1", "NC", "P3-unguarded"};
  c.threads = 1;
  const auto one = to_json(fuzz(c)).dump();
  c.threads = 4;
  const auto four = to_json(fuzz(c)).dump();
  CHECK(one == four);
  const auto j = nlohmann::json::parse(one);
  CHECK(j["seed"] == 1234);
  CHECK(j["trials"] == 60);
  CHECK(j["per_check"]["H1"]["fail"] == 0);
  CHECK(j["per_check"]["P3-unguarded"]["fail"].get<int>() > 0);
  for (const auto& w : j["witnesses"]) {
    CHECK(check(parse_edge_list(w["graph"].get<std::string>()), w["check"].get<std::string>()).status ==
          CheckStatus::kFail);
  }
  for (const char* key : {"seed", "cfg", "trials", "per_check", "witnesses"}) CHECK(j.contains(key));
}

TEST_CASE("fuzz trials depend on seed and index only") {
  Campaign c;
  c.gen = config(GeneratorKind::kBipartite, 10, 0.5, 77);
  c.n_min = 2;
  c.checks = {"P3"};
  CHECK(trial_graph(c, 5) == trial_graph(c, 5));
  for (int t = 0; t < 50; ++t) {
    const Graph g = trial_graph(c, t);
    CHECK(g.order() >= 2);
    CHECK(g.order() <= 10);
    CHECK(is_bipartite(g));
  }
  c.trials = 0;
  CHECK_THROWS_AS(fuzz(c), InputError);
  c.trials = 1;
  c.checks = {"nope"};
  CHECK_THROWS_AS(fuzz(c), InputError);
  c.checks = {};
  CHECK_THROWS_AS(fuzz(c), InputError);
}
