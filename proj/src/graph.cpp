#include "kegraph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "kegraph/errors.hpp"

namespace kegraph {

namespace {

template <class T>
std::vector<T> sorted_unique(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Union-find with path halving; used for forest tests and components.
class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto& p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

VertexSet::VertexSet(std::initializer_list<Vertex> vs) : members_(sorted_unique(std::vector<Vertex>(vs))) {}
VertexSet::VertexSet(std::vector<Vertex> vs) : members_(sorted_unique(std::move(vs))) {}

VertexSet VertexSet::range(int n) {
  std::vector<Vertex> all(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(all.begin(), all.end(), 0);
  return VertexSet(std::move(all));
}

bool VertexSet::contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

VertexSet VertexSet::unite(const VertexSet& o) const {
  std::vector<Vertex> out;
  std::set_union(begin(), end(), o.begin(), o.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet VertexSet::intersect(const VertexSet& o) const {
  std::vector<Vertex> out;
  std::set_intersection(begin(), end(), o.begin(), o.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet VertexSet::minus(const VertexSet& o) const {
  std::vector<Vertex> out;
  std::set_difference(begin(), end(), o.begin(), o.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

bool VertexSet::is_subset_of(const VertexSet& o) const { return std::includes(o.begin(), o.end(), begin(), end()); }

EdgeSet::EdgeSet(std::initializer_list<Edge> es) : EdgeSet(std::vector<Edge>(es)) {}

EdgeSet::EdgeSet(std::vector<Edge> es) {
  for (auto& e : es) e = make_edge(e.u, e.v);
  members_ = sorted_unique(std::move(es));
}

bool EdgeSet::contains(const Edge& e) const {
  return std::binary_search(members_.begin(), members_.end(), make_edge(e.u, e.v));
}

EdgeSet EdgeSet::intersect(const EdgeSet& o) const {
  std::vector<Edge> out;
  std::set_intersection(begin(), end(), o.begin(), o.end(), std::back_inserter(out));
  return EdgeSet(std::move(out));
}

EdgeSet EdgeSet::minus(const EdgeSet& o) const {
  std::vector<Edge> out;
  std::set_difference(begin(), end(), o.begin(), o.end(), std::back_inserter(out));
  return EdgeSet(std::move(out));
}

bool EdgeSet::is_subset_of(const EdgeSet& o) const { return std::includes(o.begin(), o.end(), begin(), end()); }

bool EdgeSet::is_matching() const {
  std::vector<Vertex> ends;
  ends.reserve(2 * members_.size());
  for (const auto& e : members_) {
    ends.push_back(e.u);
    ends.push_back(e.v);
  }
  std::sort(ends.begin(), ends.end());
  return std::adjacent_find(ends.begin(), ends.end()) == ends.end();
}

VertexSet EdgeSet::endpoints() const {
  std::vector<Vertex> ends;
  for (const auto& e : members_) {
    ends.push_back(e.u);
    ends.push_back(e.v);
  }
  return VertexSet(std::move(ends));
}

Matching::Matching(EdgeSet edges) : edges_(std::move(edges)) {
  if (!edges_.is_matching()) throw InputError("edge set is not a matching");
}

std::optional<Vertex> Matching::mate(Vertex v) const {
  for (const auto& e : edges_) {
    if (e.touches(v)) return e.other(v);
  }
  return std::nullopt;
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) edges.push_back(Edge{a, b});
  return from_edges(n, edges);
}

Graph Graph::from_edge_list(int n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  return from_edge_list(n, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size()));
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 0) throw InputError("negative vertex count");
  Graph g;
  g.n_ = n;
  g.adj_.assign(static_cast<std::size_t>(n), {});
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw InputError("vertex out of range in edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") for n=" + std::to_string(n));
    }
    if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
    canon.push_back(make_edge(e.u, e.v));
  }
  g.edges_ = sorted_unique(std::move(canon));
  for (const auto& e : g.edges_) {
    g.adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    g.adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& row : g.adj_) std::sort(row.begin(), row.end());
  return g;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return false;
  const auto& row = adj_[static_cast<std::size_t>(a)];
  return std::binary_search(row.begin(), row.end(), b);
}

VertexSet Relabeled::lift(const VertexSet& s) const {
  std::vector<Vertex> out;
  for (Vertex v : s) out.push_back(parent(v));
  return VertexSet(std::move(out));
}

EdgeSet Relabeled::lift(const EdgeSet& s) const {
  std::vector<Edge> out;
  for (const auto& e : s) out.push_back(make_edge(parent(e.u), parent(e.v)));
  return EdgeSet(std::move(out));
}

Graph delete_edge(const Graph& g, const Edge& e) {
  const Edge c = make_edge(e.u, e.v);
  if (!g.has_edge(c)) {
    throw InputError("edge (" + std::to_string(c.u) + "," + std::to_string(c.v) + ") is not in the graph");
  }
  std::vector<Edge> rest;
  rest.reserve(g.size());
  for (const auto& f : g.edges()) {
    if (f != c) rest.push_back(f);
  }
  return Graph::from_edges(g.order(), rest);
}

Graph add_edge(const Graph& g, const Edge& e) {
  if (g.has_edge(e)) throw InputError("edge already present");
  std::vector<Edge> all = g.edges();
  all.push_back(e);
  return Graph::from_edges(g.order(), all);
}

Relabeled induced_subgraph(const Graph& g, const VertexSet& w) {
  std::vector<int> new_id(static_cast<std::size_t>(g.order()), -1);
  Relabeled out;
  for (Vertex v : w) {
    if (v < 0 || v >= g.order()) throw InputError("vertex out of range: " + std::to_string(v));
    new_id[static_cast<std::size_t>(v)] = static_cast<int>(out.to_parent.size());
    out.to_parent.push_back(v);
  }
  std::vector<Edge> kept;
  for (const auto& e : g.edges()) {
    const int a = new_id[static_cast<std::size_t>(e.u)];
    const int b = new_id[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) kept.push_back(Edge{a, b});
  }
  out.graph = Graph::from_edges(static_cast<int>(out.to_parent.size()), kept);
  return out;
}

Relabeled delete_vertices(const Graph& g, const VertexSet& w) {
  for (Vertex v : w) {
    if (v < 0 || v >= g.order()) throw InputError("vertex out of range: " + std::to_string(v));
  }
  return induced_subgraph(g, VertexSet::range(g.order()).minus(w));
}

VertexSet neighborhood(const Graph& g, const VertexSet& a, bool closed) {
  std::vector<Vertex> out;
  for (Vertex v : a) {
    if (v < 0 || v >= g.order()) throw InputError("vertex out of range: " + std::to_string(v));
    if (closed) out.push_back(v);
    for (Vertex w : g.neighbors(v)) out.push_back(w);
  }
  return VertexSet(std::move(out));
}

bool is_stable(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    for (Vertex w : g.neighbors(v)) {
      if (w > v && s.contains(w)) return false;
    }
  }
  return true;
}

Bipartition bipartition(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  Bipartition out;
  out.color.assign(n, -1);
  std::vector<Vertex> parent(n, -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (out.color[static_cast<std::size_t>(s)] >= 0) continue;
    out.color[static_cast<std::size_t>(s)] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      for (Vertex w : g.neighbors(v)) {
        auto& cw = out.color[static_cast<std::size_t>(w)];
        if (cw < 0) {
          cw = 1 - out.color[static_cast<std::size_t>(v)];
          parent[static_cast<std::size_t>(w)] = v;
          q.push(w);
        } else if (cw == out.color[static_cast<std::size_t>(v)]) {
          // Same color on both ends: the two tree paths to their lowest
          // common ancestor plus vw close an odd cycle.
          std::vector<Vertex> up_v;
          for (Vertex x = v; x >= 0; x = parent[static_cast<std::size_t>(x)]) up_v.push_back(x);
          std::vector<Vertex> up_w;
          Vertex meet = w;
          while (std::find(up_v.begin(), up_v.end(), meet) == up_v.end()) {
            up_w.push_back(meet);
            meet = parent[static_cast<std::size_t>(meet)];
          }
          for (Vertex x : up_v) {
            out.odd_cycle.push_back(x);
            if (x == meet) break;
          }
          out.odd_cycle.insert(out.odd_cycle.end(), up_w.rbegin(), up_w.rend());
          out.bipartite = false;
          out.color.clear();
          return out;
        }
      }
    }
  }
  out.bipartite = true;
  return out;
}

bool is_bipartite(const Graph& g) { return bipartition(g).bipartite; }

bool spans_forest(const Graph& g, const EdgeSet& w) {
  DisjointSets ds(g.order());
  for (const auto& e : w) {
    if (!g.has_edge(e)) throw InputError("edge set is not contained in the graph");
    if (!ds.unite(e.u, e.v)) return false;
  }
  return true;
}

std::vector<VertexSet> components(const Graph& g) {
  DisjointSets ds(g.order());
  for (const auto& e : g.edges()) ds.unite(e.u, e.v);
  std::vector<std::vector<Vertex>> groups(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) groups[static_cast<std::size_t>(ds.find(v))].push_back(v);
  std::vector<VertexSet> out;
  for (auto& grp : groups) {
    if (!grp.empty()) out.emplace_back(std::move(grp));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == static_cast<std::size_t>(g.order() - 1) && is_connected(g);
}

EdgeSet cut_edges(const Graph& g, const VertexSet& a, const VertexSet& b) {
  std::vector<Edge> out;
  for (const auto& e : g.edges()) {
    if ((a.contains(e.u) && b.contains(e.v)) || (a.contains(e.v) && b.contains(e.u))) out.push_back(e);
  }
  return EdgeSet(std::move(out));
}

}  // namespace kegraph
