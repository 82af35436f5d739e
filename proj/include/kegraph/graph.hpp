#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace kegraph {

using Vertex = int;

/// Unordered pair stored canonically with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;

  bool touches(Vertex x) const { return u == x || v == x; }
  bool shares_endpoint(const Edge& o) const { return touches(o.u) || touches(o.v); }
  Vertex other(Vertex x) const { return x == u ? v : u; }
};

/// Canonicalizes {a, b}. Does not validate a != b.
inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Sorted, duplicate-free set of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs);
  explicit VertexSet(std::vector<Vertex> vs);

  static VertexSet range(int n);

  std::span<const Vertex> members() const { return members_; }
  const std::vector<Vertex>& vec() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  VertexSet unite(const VertexSet& o) const;
  VertexSet intersect(const VertexSet& o) const;
  VertexSet minus(const VertexSet& o) const;
  bool is_subset_of(const VertexSet& o) const;

  auto operator<=>(const VertexSet&) const = default;

 private:
  std::vector<Vertex> members_;
};

/// Sorted, duplicate-free set of canonical edges.
class EdgeSet {
 public:
  EdgeSet() = default;
  EdgeSet(std::initializer_list<Edge> es);
  explicit EdgeSet(std::vector<Edge> es);

  std::span<const Edge> members() const { return members_; }
  const std::vector<Edge>& vec() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(const Edge& e) const;
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  EdgeSet intersect(const EdgeSet& o) const;
  EdgeSet minus(const EdgeSet& o) const;
  bool is_subset_of(const EdgeSet& o) const;
  /// True iff no two members share an endpoint.
  bool is_matching() const;
  VertexSet endpoints() const;

  auto operator<=>(const EdgeSet&) const = default;

 private:
  std::vector<Edge> members_;
};

/// A set of pairwise non-incident edges.
class Matching {
 public:
  Matching() = default;
  /// Throws InputError if two edges share an endpoint.
  explicit Matching(EdgeSet edges);

  const EdgeSet& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  /// Partner of v, if v is saturated.
  std::optional<Vertex> mate(Vertex v) const;
  bool saturates(Vertex v) const { return mate(v).has_value(); }

  auto operator<=>(const Matching&) const = default;

 private:
  EdgeSet edges_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from unordered pairs. Duplicates collapse; order is
  /// irrelevant. Throws InputError on self-loops or out-of-range ids.
  static Graph from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> pairs);
  static Graph from_edge_list(int n, std::initializer_list<std::pair<Vertex, Vertex>> pairs);
  static Graph from_edges(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  EdgeSet edge_set() const { return EdgeSet(edges_); }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool has_edge(Vertex a, Vertex b) const;
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
};

struct Relabeled {
  Graph graph;
  /// to_parent[new_id] = id in the original graph.
  std::vector<Vertex> to_parent;

  Vertex parent(Vertex v) const { return to_parent[static_cast<std::size_t>(v)]; }
  VertexSet lift(const VertexSet& s) const;
  EdgeSet lift(const EdgeSet& s) const;
};

/// G - e. Throws InputError if e is not an edge of g.
Graph delete_edge(const Graph& g, const Edge& e);
/// G + e. Throws InputError on a self-loop, out-of-range id or existing edge.
Graph add_edge(const Graph& g, const Edge& e);
/// G - W = G[V - W], densely relabeled (relative order preserved).
Relabeled delete_vertices(const Graph& g, const VertexSet& w);
/// G[W], densely relabeled.
Relabeled induced_subgraph(const Graph& g, const VertexSet& w);

/// N(A) when closed is false, N[A] = A ∪ N(A) when closed is true.
VertexSet neighborhood(const Graph& g, const VertexSet& a, bool closed);
bool is_stable(const Graph& g, const VertexSet& s);

struct Bipartition {
  bool bipartite = false;
  /// Color per vertex (0/1) when bipartite.
  std::vector<int> color;
  /// Vertices of some odd closed walk through a BFS tree when not bipartite.
  std::vector<Vertex> odd_cycle;
};
Bipartition bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

/// True iff the partial graph (V, w) is acyclic.
bool spans_forest(const Graph& g, const EdgeSet& w);
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
/// (A, B): edges with one endpoint in a and the other in b.
EdgeSet cut_edges(const Graph& g, const VertexSet& a, const VertexSet& b);

}  // namespace kegraph
