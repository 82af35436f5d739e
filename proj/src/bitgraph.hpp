#pragma once

// Bitmask adjacency for the exact solvers. Vertex v is bit v; graphs are
// limited to 64 vertices, well above every configured cap.

#include <bit>
#include <cstdint>
#include <vector>

#include "kegraph/graph.hpp"

namespace kegraph::detail {

using Mask = std::uint64_t;

inline Mask bit(int v) { return Mask{1} << v; }
inline int count(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }

class BitGraph {
 public:
  explicit BitGraph(const Graph& g);

  int order() const { return n_; }
  Mask all() const { return n_ == 64 ? ~Mask{0} : bit(n_) - 1; }
  Mask neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  Mask closed(int v) const { return adj_[static_cast<std::size_t>(v)] | bit(v); }

 private:
  int n_ = 0;
  std::vector<Mask> adj_;
};

/// Exact maximum stable set restricted to `cand`; returns the set.
Mask max_stable_within(const BitGraph& g, Mask cand);

/// Greedy clique-cover size of `cand`, an upper bound on its stability number.
int clique_cover_bound(const BitGraph& g, Mask cand);

VertexSet to_vertex_set(Mask m);

}  // namespace kegraph::detail
