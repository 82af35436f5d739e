// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "kegraph/criticality.hpp"
#include "kegraph/harness/checks.hpp"
#include "kegraph/harness/fixtures.hpp"
#include "kegraph/harness/fuzz.hpp"
#include "kegraph/ke_analysis.hpp"
#include "kegraph/matching.hpp"
#include "oracle.hpp"

using namespace kegraph;
using namespace kegraph::harness;

namespace {

// Collects the reasons a criterion failed.
struct Verdict {
  std::vector<std::string> problems;

  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

template <class T>
std::string eq(const char* name, const T& got, const T& want) {
  std::ostringstream out;
  out << name << ": got " << got << ", want " << want;
  return out.str();
}

void expect_params(Verdict& v, const ParameterReport& r, std::vector<std::pair<const char*, int>> want) {
  const std::map<std::string, int> got{{"n", r.n},   {"m", r.m},   {"alpha", r.alpha}, {"mu", r.mu},
                                       {"xi", r.xi}, {"sigma", r.sigma}, {"eta", r.eta}};
  for (auto [name, value] : want) v.expect(got.at(name) == value, eq(name, got.at(name), value));
}

void expect_oracle(Verdict& v, const Graph& g, const ParameterReport& r) {
  const oracle::Brute b(g);
  v.expect(r.alpha == b.alpha(), "alpha differs from the oracle");
  v.expect(r.mu == b.mu(), "mu differs from the oracle");
  v.expect(r.core.vec() == b.core(), "core differs from the oracle");
  v.expect(r.anticore.vec() == b.anticore(), "anticore differs from the oracle");
  v.expect(oracle::pairs(r.alpha_critical_edges) == b.alpha_critical(), "alpha-critical edges differ from the oracle");
  v.expect(oracle::pairs(r.mu_critical_edges) == b.mu_critical(), "mu-critical edges differ from the oracle");
}

Verdict fixture_k3e() {
  Verdict v;
  const Graph& g = fixture("k3_plus_e").graph;
  const auto r = parameter_report(g);
  expect_params(v, r, {{"n", 4}, {"m", 4}, {"alpha", 2}, {"mu", 2}, {"xi", 1}, {"sigma", 1}, {"eta", 1}});
  v.expect(r.is_ke, "is_ke should be true");
  const auto pm = perfect_matching_status(g);
  v.expect(pm.unique(), "perfect matching should be unique");
  v.expect(pm.unique() && r.mu_critical_edges == pm.witnesses.front().edges(),
           "mu-critical edges should be the unique perfect matching");
  v.expect(r.mu_critical_edges.size() == 2, "two mu-critical edges expected");
  v.expect(r.alpha_critical_edges.is_subset_of(r.mu_critical_edges) && r.alpha_critical_edges != r.mu_critical_edges,
           "alpha-critical edges should be a proper subset of the mu-critical edges");
  expect_oracle(v, g, r);
  return v;
}

Verdict fixture_w1() {
  Verdict v;
  const Graph& g = fixture("w1").graph;
  const auto r = parameter_report(g);
  expect_params(v, r, {{"alpha", 3}, {"mu", 2}, {"eta", 3}, {"xi", 2}, {"sigma", 1}});
  v.expect(!r.is_ke, "is_ke should be false");
  v.expect(r.xi + r.eta > r.alpha, "xi+eta should exceed alpha");
  v.expect(r.sigma + r.eta > r.mu, "sigma+eta should exceed mu");
  expect_oracle(v, g, r);
  return v;
}

Verdict fixture_fig7() {
  Verdict v;
  const auto& f = fixture("fig7_g0");
  const Graph& g = f.graph;
  const auto pm = perfect_matching_status(g);
  v.expect(static_cast<int>(pm.count) == 1, "perfect_matching_status should be 1");
  const auto r = parameter_report(g);
  v.expect(r.xi == 0, eq("xi", r.xi, 0));
  if (!pm.unique()) return v;

  const VertexSet a{f.id("a1"), f.id("a2"), f.id("a3"), f.id("a4"), f.id("a5")};
  auto id = [&](const char* l) { return f.id(l); };
  const auto t = s0_procedure(g, pm.witnesses.front(), a, id("b1"));
  const std::vector<VertexSet> trace{
      {id("b1")}, {id("b1"), id("b2"), id("b3")}, {id("b1"), id("b2"), id("b3"), id("b4")}};
  v.expect(t.steps.size() == trace.size(), "S0 trace should have three states");
  for (std::size_t i = 0; i < std::min(t.steps.size(), trace.size()); ++i) {
    v.expect(t.steps[i].s0 == trace[i], "S0 trace state " + std::to_string(i) + " differs");
  }
  v.expect(t.s0 == VertexSet{id("b1"), id("b2"), id("b3"), id("b4"), id("a5")}, "final S0 should be {b1,b2,b3,b4,a5}");
  const EdgeSet m = pm.witnesses.front().edges();
  v.expect(m.size() == 5 && m.is_subset_of(r.alpha_critical_edges), "all five matching edges should be alpha-critical");
  v.expect(check(g, "L3").status == CheckStatus::kPass, "check L3 should pass");
  expect_oracle(v, g, r);
  return v;
}

Verdict fixture_fig8() {
  Verdict v;
  const auto& f = fixture("fig8_bipartite");
  const auto r = parameter_report(f.graph);
  expect_params(v, r, {{"xi", 2}, {"eta", 0}, {"alpha", 4}, {"sigma", 1}});
  const oracle::Brute b(f.graph);
  v.expect(r.mu == b.mu(), "mu differs from the oracle");
  v.expect(r.mu == 3, eq("mu", r.mu, 3));
  v.expect(r.is_bipartite, "graph should be bipartite");
  v.expect(!f.notes.empty(), "the published mu discrepancy should be recorded in the fixture notes");
  v.expect(!r.equalities.xi_eta_alpha && !r.equalities.sigma_eta_mu && !r.equalities.xi_2eta_sigma_n,
           "all three tree equalities should fail");
  expect_oracle(v, f.graph, r);
  return v;
}

Verdict campaign(GeneratorKind kind, int n_min, int n_max, std::vector<double> grid, std::uint64_t seed,
                 std::vector<std::string> checks) {
  Campaign c;
  c.gen.kind = kind;
  c.gen.n = n_max;
  c.gen.p = grid.empty() ? 0.5 : grid.front();
  c.gen.seed = seed;
  c.n_min = n_min;
  c.p_grid = std::move(grid);
  c.trials = 1000;
  c.checks = std::move(checks);
  c.threads = 0;
  const auto s = fuzz(c);
  Verdict v;
  for (const auto& [id, t] : s.per_check) {
    v.expect(t.fail == 0, id + ": " + std::to_string(t.fail) + " failures");
    v.expect(t.pass > 0, id + ": never applicable");
  }
  for (const auto& w : s.witnesses) v.expect(false, w.check_id + " trial " + std::to_string(w.trial) + ": " + w.detail);
  std::printf("      ");
  for (const auto& [id, t] : s.per_check) std::printf(" %s=%d/%d/%d", id.c_str(), t.pass, t.fail, t.na);
  std::printf("  (pass/fail/na)\n");
  return v;
}

std::vector<double> decile_grid() { return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}; }

Verdict oracle_equivalence() {
  Verdict v;
  std::mt19937_64 rng(20240501);
  const auto grid = decile_grid();
  for (int i = 0; i < 500; ++i) {
    const int n = static_cast<int>(rng() % 11);
    const Graph g = oracle::random_graph(rng, n, grid[rng() % grid.size()]);
    const int blossom = matching_number(g);
    const int brute = maximum_matching_bruteforce(g);
    v.expect(blossom == brute, "graph " + std::to_string(i) + ": blossom mu " + std::to_string(blossom) +
                                   " != brute-force mu " + std::to_string(brute));
    EdgeSet common = g.edge_set();
    for (const auto& m : enumerate_maximum_matchings(g)) common = common.intersect(m.edges());
    v.expect(mu_critical_edges(g) == common,
             "graph " + std::to_string(i) + ": mu-critical edges differ from the intersection of maximum matchings");
  }
  return v;
}

Verdict negative_controls() {
  Verdict v;
  v.expect(check(fixture("w1").graph, "P7-unguarded").status == CheckStatus::kFail, "P7-unguarded should fail on W1");
  v.expect(check(fixture("w1").graph, "P7").status == CheckStatus::kNotApplicable, "guarded P7 should not apply to W1");
  v.expect(check(fixture("k3").graph, "P3-unguarded").status == CheckStatus::kFail, "P3-unguarded should fail on K3");
  return v;
}

Verdict determinism() {
  Verdict v;
  Campaign c;
  c.gen.kind = GeneratorKind::kGnp;
  c.gen.n = 10;
  c.gen.seed = 99;
  c.p_grid = decile_grid();
  c.trials = 300;
  c.checks = default_check_ids();
  c.checks.push_back("P3-unguarded");
  c.threads = 1;
  const auto first = to_json(fuzz(c)).dump();
  const auto second = to_json(fuzz(c)).dump();
  c.threads = 0;
  const auto parallel = to_json(fuzz(c)).dump();
  v.expect(first == second, "two identical runs differ");
  v.expect(first == parallel, "parallel run differs from the sequential one");
  v.expect(first.find("\"witnesses\":[]") == std::string::npos, "the campaign should record witnesses to compare");
  return v;
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    const char* name;
    double budget_seconds;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "fixture K3+e", 1.0, fixture_k3e},
      {2, "fixture W1", 1.0, fixture_w1},
      {3, "fixture unique-matching G0 and S0 trace", 1.0, fixture_fig7},
      {4, "fixture bipartite graph with failing tree equalities", 1.0, fixture_fig8},
      {5, "1000 random trees, n 2..16", 60.0,
       [] {
         return campaign(GeneratorKind::kTree, 2, 16, {}, 501,
                         {"C1", "C4", "C5", "P3", "T1i", "T1ii", "T1iii"});
       }},
      {6, "1000 ke_synth graphs, n <= 12", 300.0,
       [] {
         return campaign(GeneratorKind::kKeSynth, 1, 12, decile_grid(), 601,
                         {"T1i", "T1ii", "T1iii", "CK2", "C2", "NC", "P5i", "P5ii", "P5iii", "P7", "P9i", "P9ii",
                          "P9iii", "P10", "L6i", "L6ii", "L6iii", "L3", "T2"});
       }},
      {7, "1000 G(n,p) graphs, n <= 12", 300.0,
       [] { return campaign(GeneratorKind::kGnp, 1, 12, decile_grid(), 701, {"BHP", "H1", "NC"}); }},
      {8, "blossom and forced edges against brute force, 500 graphs", 300.0, oracle_equivalence},
      {9, "negative controls", 1.0, negative_controls},
      {10, "byte-identical fuzz summaries", 300.0, determinism},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.problems.push_back(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    v.expect(seconds < c.budget_seconds, "took " + std::to_string(seconds) + " s, budget " +
                                             std::to_string(c.budget_seconds) + " s");
    const bool ok = v.problems.empty();
    failed += ok ? 0 : 1;
    std::printf("%s  %2d  %s  (%.3f s)\n", ok ? "PASS" : "FAIL", c.number, c.name, seconds);
    for (const auto& p : v.problems) std::printf("        %s\n", p.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
