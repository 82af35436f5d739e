#include "kegraph/harness/generators.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include "kegraph/errors.hpp"
#include "kegraph/ke_analysis.hpp"

namespace kegraph::harness {

namespace {

using Rng = std::mt19937_64;

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Graph random_tree(int n, Rng& rng) {
  if (n <= 1) return Graph::from_edges(std::max(n, 0), {});
  std::vector<int> seq(static_cast<std::size_t>(n - 2));
  for (auto& x : seq) x = uniform_int(rng, 0, n - 1);
  return tree_from_pruefer(seq);
}

Graph random_bipartite(int n1, int n2, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (int a = 0; a < n1; ++a) {
    for (int b = 0; b < n2; ++b) {
      if (coin(rng, p)) edges.push_back(Edge{a, n1 + b});
    }
  }
  return Graph::from_edges(n1 + n2, edges);
}

Graph random_gnp(int n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (coin(rng, p)) edges.push_back(Edge{a, b});
    }
  }
  return Graph::from_edges(n, edges);
}

Graph random_ke(int n, double p, Rng& rng) {
  // Positions 0..s-1 form S, s..n-1 form H; labels are shuffled at the end.
  const int h = uniform_int(rng, 0, n / 2);
  const int s = n - h;
  std::vector<int> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  std::vector<int> into_s(static_cast<std::size_t>(s));
  std::iota(into_s.begin(), into_s.end(), 0);
  std::shuffle(into_s.begin(), into_s.end(), rng);

  std::vector<Edge> edges;
  for (int i = 0; i < h; ++i) edges.push_back(Edge{s + i, into_s[static_cast<std::size_t>(i)]});
  for (int i = 0; i < h; ++i) {
    for (int j = i + 1; j < h; ++j) {
      if (coin(rng, p)) edges.push_back(Edge{s + i, s + j});
    }
  }
  for (int i = 0; i < h; ++i) {
    for (int a = 0; a < s; ++a) {
      if (a != into_s[static_cast<std::size_t>(i)] && coin(rng, p)) edges.push_back(Edge{s + i, a});
    }
  }
  std::shuffle(label.begin(), label.end(), rng);
  for (auto& e : edges) {
    e = make_edge(label[static_cast<std::size_t>(e.u)], label[static_cast<std::size_t>(e.v)]);
  }
  Graph g = Graph::from_edges(n, edges);
  if (!is_koenig_egervary(g)) throw InternalError("ke_synth produced a graph that is not König-Egerváry");
  return g;
}

}  // namespace

std::string_view to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kTree: return "tree";
    case GeneratorKind::kBipartite: return "bipartite";
    case GeneratorKind::kKeSynth: return "ke_synth";
    case GeneratorKind::kGnp: return "gnp";
    case GeneratorKind::kCycle: return "cycle";
    case GeneratorKind::kPath: return "path";
    case GeneratorKind::kComplete: return "complete";
  }
  return "unknown";
}

std::optional<GeneratorKind> parse_generator_kind(std::string_view name) {
  if (name == "tree") return GeneratorKind::kTree;
  if (name == "bipartite") return GeneratorKind::kBipartite;
  if (name == "ke" || name == "ke_synth") return GeneratorKind::kKeSynth;
  if (name == "gnp") return GeneratorKind::kGnp;
  if (name == "cycle") return GeneratorKind::kCycle;
  if (name == "path") return GeneratorKind::kPath;
  if (name == "complete") return GeneratorKind::kComplete;
  return std::nullopt;
}

void validate(const GeneratorConfig& cfg) {
  if (cfg.n < 0 || cfg.n2 < 0) throw InputError("generator: negative vertex count");
  if (!(cfg.p >= 0.0 && cfg.p <= 1.0)) throw InputError("generator: p must lie in [0, 1]");
  if (cfg.n + cfg.n2 > 64) throw InputError("generator: more than 64 vertices");
  if (cfg.kind == GeneratorKind::kCycle && cfg.n < 3) throw InputError("generator: a cycle needs n >= 3");
}

Graph generate(const GeneratorConfig& cfg) {
  validate(cfg);
  Rng rng(cfg.seed);
  switch (cfg.kind) {
    case GeneratorKind::kTree: return random_tree(cfg.n, rng);
    case GeneratorKind::kBipartite: return random_bipartite(cfg.n, cfg.n2, cfg.p, rng);
    case GeneratorKind::kKeSynth: return random_ke(cfg.n, cfg.p, rng);
    case GeneratorKind::kGnp: return random_gnp(cfg.n, cfg.p, rng);
    case GeneratorKind::kCycle: return cycle_graph(cfg.n);
    case GeneratorKind::kPath: return path_graph(cfg.n);
    case GeneratorKind::kComplete: return complete_graph(cfg.n);
  }
  throw InputError("generator: unknown kind");
}

Graph tree_from_pruefer(std::span<const int> sequence) {
  const int n = static_cast<int>(sequence.size()) + 2;
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : sequence) {
    if (x < 0 || x >= n) throw InputError("Prüfer label out of range");
    ++degree[static_cast<std::size_t>(x)];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[static_cast<std::size_t>(v)] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  for (int x : sequence) {
    const int leaf = leaves.top();
    leaves.pop();
    edges.push_back(Edge{leaf, x});
    if (--degree[static_cast<std::size_t>(x)] == 1) leaves.push(x);
  }
  const int a = leaves.top();
  leaves.pop();
  edges.push_back(Edge{a, leaves.top()});
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(Edge{i, (i + 1) % n});
  return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back(Edge{i, i + 1});
  return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) edges.push_back(Edge{a, b});
  }
  return Graph::from_edges(n, edges);
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back(Edge{0, i});
  return Graph::from_edges(leaves + 1, edges);
}

}  // namespace kegraph::harness
