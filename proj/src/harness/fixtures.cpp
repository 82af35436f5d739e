#include "kegraph/harness/fixtures.hpp"

#include <algorithm>
#include <sstream>

#include "kegraph/edge_list.hpp"
#include "kegraph/errors.hpp"
#include "kegraph/harness/generators.hpp"

namespace kegraph::harness {

namespace {

using P = Provenance;

struct LabeledEdge {
  const char* a;
  const char* b;
};

Fixture labeled(std::string name, std::string description, std::vector<std::string> labels,
                std::initializer_list<LabeledEdge> edges) {
  Fixture f;
  f.name = std::move(name);
  f.description = std::move(description);
  f.labels = std::move(labels);
  std::vector<Edge> es;
  for (const auto& e : edges) {
    auto find = [&](const char* l) {
      const auto it = std::find(f.labels.begin(), f.labels.end(), l);
      return static_cast<Vertex>(it - f.labels.begin());
    };
    es.push_back(Edge{find(e.a), find(e.b)});
  }
  f.graph = Graph::from_edges(static_cast<int>(f.labels.size()), es);
  return f;
}

Fixture plain(std::string name, std::string description, Graph g) {
  Fixture f;
  f.name = std::move(name);
  f.description = std::move(description);
  for (Vertex v = 0; v < g.order(); ++v) f.labels.push_back(std::to_string(v));
  f.graph = std::move(g);
  return f;
}

std::vector<Fixture> build() {
  std::vector<Fixture> out;

  // Triangle abc with the pendant edge e = ad.
  auto k3e = labeled("k3_plus_e", "K3+e: triangle with a pendant edge", {"a", "b", "c", "d"},
                     {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"a", "d"}});
  k3e.expected = {{"n", 4, P::kPublished},     {"m", 4, P::kPublished},  {"alpha", 2, P::kDerived}, {"mu", 2, P::kDerived},
                  {"xi", 1, P::kDerived},  {"sigma", 1, P::kDerived}, {"eta", 1, P::kDerived},
                  {"is_ke", 1, P::kPublished}, {"g0_pm_status", 1, P::kDerived}};
  out.push_back(std::move(k3e));

  // Path u0 u1 u2 u3, triangle u1 u2 t2, pendant t1 on t2.
  auto fig2 = labeled("fig2_ke_nonbipartite",
                      "non-bipartite KE graph whose mu-critical edges are all alpha-critical",
                      {"u0", "u1", "u2", "u3", "t1", "t2"},
                      {{"u0", "u1"}, {"u1", "u2"}, {"u2", "u3"}, {"t1", "t2"}, {"u2", "t2"}, {"u1", "t2"}});
  fig2.expected = {{"is_ke", 1, P::kPublished}, {"alpha", 3, P::kDerived}, {"mu", 3, P::kDerived},
                   {"eta", 3, P::kDerived}, {"xi", 0, P::kDerived},    {"sigma", 0, P::kDerived}};
  out.push_back(std::move(fig2));

  // Path p1 p2 p3 p4, pendant q2 on p2, triangle p3 p4 q3.
  auto w1 = labeled("w1", "W1: non-KE graph violating the parameter inequalities", {"p1", "p2", "p3", "p4", "q2", "q3"},
                    {{"p1", "p2"}, {"p2", "p3"}, {"p3", "p4"}, {"p2", "q2"}, {"p3", "q3"}, {"p4", "q3"}});
  w1.expected = {{"alpha", 3, P::kPublished}, {"mu", 2, P::kPublished},    {"eta", 3, P::kPublished},
                 {"xi", 2, P::kPublished},    {"sigma", 1, P::kPublished}, {"is_ke", 0, P::kPublished}};
  out.push_back(std::move(w1));

  // Unique perfect matching a_i b_i plus cross edges.
  auto fig7 = labeled("fig7_g0", "G0 with a unique perfect matching and empty core",
                      {"a1", "a2", "a3", "a4", "a5", "b1", "b2", "b3", "b4", "b5"},
                      {{"a1", "b1"}, {"a2", "b2"}, {"a3", "b3"}, {"a4", "b4"}, {"a5", "b5"}, {"a2", "b1"},
                       {"a3", "b1"}, {"a2", "b5"}, {"a3", "b5"}, {"a4", "b2"}, {"a4", "b3"}, {"b1", "b5"}});
  fig7.expected = {{"g0_pm_status", 1, P::kPublished}, {"xi", 0, P::kPublished},    {"eta", 5, P::kPublished},
                   {"alpha", 5, P::kDerived},      {"mu", 5, P::kDerived},  {"is_ke", 1, P::kDerived}};
  out.push_back(std::move(fig7));

  // Bottom path b1..b4, top t2 t3 t4 with t3t4, verticals b_i t_i.
  auto fig8 = labeled("fig8_bipartite", "bipartite graph where the tree equalities fail",
                      {"b1", "b2", "b3", "b4", "t2", "t3", "t4"},
                      {{"b1", "b2"}, {"b2", "b3"}, {"b3", "b4"}, {"t3", "t4"}, {"b2", "t2"}, {"b3", "t3"}, {"b4", "t4"}});
  fig8.expected = {{"xi", 2, P::kPublished}, {"eta", 0, P::kPublished}, {"alpha", 4, P::kPublished}, {"sigma", 1, P::kPublished},
                   {"n", 7, P::kPublished},  {"mu", 3, P::kDerived}, {"is_ke", 1, P::kPublished}};
  fig8.notes = {"published value mu=4 conflicts with alpha+mu=n for this bipartite graph (n=7, alpha=4), which forces mu=3"};
  out.push_back(std::move(fig8));

  // S1={a,b,c,d} has a cyclic cut, S2={a,b,y,z} an acyclic one.
  auto fig9 = labeled("fig9_forest", "KE graph with some maximum stable set whose cut is a forest",
                      {"a", "b", "c", "d", "x", "y", "z"},
                      {{"x", "a"}, {"x", "b"}, {"x", "c"}, {"x", "d"}, {"y", "c"}, {"y", "d"}, {"z", "d"}});
  fig9.expected = {{"forest_condition", 1, P::kPublished}, {"xi_eta_alpha", 1, P::kPublished},
                   {"alpha", 4, P::kDerived},          {"is_ke", 1, P::kPublished}};
  out.push_back(std::move(fig9));

  auto fig9c = labeled("fig9_counterexample", "KE graph satisfying the equalities without the forest condition",
                       {"a", "b", "c", "d", "x", "y"},
                       {{"y", "a"}, {"x", "b"}, {"d", "c"}, {"y", "x"}, {"x", "d"}, {"y", "b"}, {"a", "x"}});
  fig9c.expected = {{"forest_condition", 0, P::kPublished}, {"xi_eta_alpha", 1, P::kPublished},
                    {"sigma_eta_mu", 1, P::kPublished},     {"xi_2eta_sigma_n", 1, P::kPublished},
                    {"is_ke", 1, P::kPublished}};
  out.push_back(std::move(fig9c));

  out.push_back(plain("k2", "complete graph on two vertices", complete_graph(2)));
  out.push_back(plain("k3", "triangle", complete_graph(3)));
  out.push_back(plain("c4", "4-cycle", cycle_graph(4)));
  out.push_back(plain("c5", "5-cycle", cycle_graph(5)));
  out.push_back(plain("c6", "6-cycle", cycle_graph(6)));
  out.push_back(plain("p4", "path on four vertices", path_graph(4)));
  out.push_back(plain("star3", "star K1,3 with center 0", star_graph(3)));
  return out;
}

}  // namespace

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::kPublished: return "published";
    case Provenance::kDerived: return "derived";
    case Provenance::kTrivial: return "trivial";
  }
  return "unknown";
}

std::optional<int> Fixture::expect(std::string_view field) const {
  for (const auto& e : expected) {
    if (e.field == field) return e.value;
  }
  return std::nullopt;
}

Vertex Fixture::id(std::string_view label) const {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw InputError("fixture " + name + " has no vertex labeled '" + std::string(label) + "'");
  return static_cast<Vertex>(it - labels.begin());
}

std::string Fixture::to_edge_list() const {
  std::ostringstream comment;
  comment << name << ": " << description << '\n';
  comment << "labels:";
  for (std::size_t i = 0; i < labels.size(); ++i) comment << ' ' << labels[i] << '=' << i;
  comment << '\n';
  for (const auto& note : notes) comment << "note: " << note << '\n';
  return format_edge_list(graph, comment.str());
}

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = build();
  return all;
}

const Fixture& fixture(std::string_view name) {
  for (const auto& f : fixtures()) {
    if (f.name == name) return f;
  }
  throw InputError("unknown fixture '" + std::string(name) + "'");
}

}  // namespace kegraph::harness
