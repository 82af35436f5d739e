#include "kegraph/stable_sets.hpp"

#include <string>

#include "bitgraph.hpp"

namespace kegraph {

namespace detail {

BitGraph::BitGraph(const Graph& g) : n_(g.order()), adj_(static_cast<std::size_t>(g.order()), 0) {
  if (n_ > 64) throw CapacityError("bitmask solvers support at most 64 vertices");
  for (const auto& e : g.edges()) {
    adj_[static_cast<std::size_t>(e.u)] |= bit(e.v);
    adj_[static_cast<std::size_t>(e.v)] |= bit(e.u);
  }
}

int clique_cover_bound(const BitGraph& g, Mask cand) {
  // Each clique holds at most one vertex of any stable set.
  Mask cliques[64];
  int k = 0;
  for (Mask rest = cand; rest; rest &= rest - 1) {
    const int v = lowest(rest);
    const Mask nv = g.neighbors(v);
    int i = 0;
    while (i < k && (cliques[i] & ~nv) != 0) ++i;
    if (i == k) cliques[k++] = 0;
    cliques[i] |= bit(v);
  }
  return k;
}

VertexSet to_vertex_set(Mask m) {
  std::vector<Vertex> out;
  for (; m; m &= m - 1) out.push_back(lowest(m));
  return VertexSet(std::move(out));
}

namespace {

class AlphaSearch {
 public:
  explicit AlphaSearch(const BitGraph& g) : g_(g) {}

  Mask solve(Mask cand) {
    best_ = greedy(cand);
    best_size_ = count(best_);
    branch(cand, 0);
    return best_;
  }

 private:
  Mask greedy(Mask cand) const {
    Mask chosen = 0;
    while (cand) {
      int pick = -1;
      int pick_deg = 65;
      for (Mask r = cand; r; r &= r - 1) {
        const int v = lowest(r);
        const int d = count(g_.neighbors(v) & cand);
        if (d < pick_deg) {
          pick = v;
          pick_deg = d;
        }
      }
      chosen |= bit(pick);
      cand &= ~g_.closed(pick);
    }
    return chosen;
  }

  void branch(Mask cand, Mask chosen) {
    // Vertices of degree <= 1 belong to some maximum stable set of what remains.
    for (bool changed = true; changed && cand;) {
      changed = false;
      for (Mask r = cand; r; r &= r - 1) {
        const int v = lowest(r);
        if (!(cand & bit(v))) continue;
        if (count(g_.neighbors(v) & cand) <= 1) {
          chosen |= bit(v);
          cand &= ~g_.closed(v);
          changed = true;
        }
      }
    }
    const int size = count(chosen);
    if (!cand) {
      if (size > best_size_) {
        best_ = chosen;
        best_size_ = size;
      }
      return;
    }
    if (size + count(cand) <= best_size_) return;
    if (size + clique_cover_bound(g_, cand) <= best_size_) return;

    int pivot = -1;
    int pivot_deg = -1;
    for (Mask r = cand; r; r &= r - 1) {
      const int v = lowest(r);
      const int d = count(g_.neighbors(v) & cand);
      if (d > pivot_deg) {
        pivot = v;
        pivot_deg = d;
      }
    }
    branch(cand & ~g_.closed(pivot), chosen | bit(pivot));
    branch(cand & ~bit(pivot), chosen);
  }

  const BitGraph& g_;
  Mask best_ = 0;
  int best_size_ = 0;
};

}  // namespace

Mask max_stable_within(const BitGraph& g, Mask cand) { return AlphaSearch(g).solve(cand); }

}  // namespace detail

namespace {

using detail::BitGraph;
using detail::Mask;

void require_alpha_capacity(const Graph& g, const SolverLimits& limits) {
  if (g.order() > limits.max_alpha_vertices) {
    throw CapacityError("stability number: n=" + std::to_string(g.order()) + " exceeds the vertex cap of " +
                        std::to_string(limits.max_alpha_vertices));
  }
}

int alpha_within(const BitGraph& bg, Mask cand) { return detail::count(detail::max_stable_within(bg, cand)); }

class OmegaEnumerator {
 public:
  OmegaEnumerator(const BitGraph& g, int alpha, std::size_t cap) : g_(g), alpha_(alpha), cap_(cap) {}

  std::vector<Mask> run() {
    visit(g_.all(), 0, 0);
    return found_;
  }

 private:
  void visit(Mask cand, int size, Mask chosen) {
    if (size == alpha_) {
      if (found_.size() == cap_) {
        throw CapacityError("maximum stable set enumeration exceeded the cap of " + std::to_string(cap_) + " sets");
      }
      found_.push_back(chosen);
      return;
    }
    if (!cand) return;
    if (size + detail::count(cand) < alpha_) return;
    if (size + detail::clique_cover_bound(g_, cand) < alpha_) return;
    // Include-first on the lowest vertex yields lexicographic order.
    const int v = detail::lowest(cand);
    visit(cand & ~g_.closed(v), size + 1, chosen | detail::bit(v));
    visit(cand & ~detail::bit(v), size, chosen);
  }

  const BitGraph& g_;
  int alpha_;
  std::size_t cap_;
  std::vector<Mask> found_;
};

}  // namespace

int stability_number(const Graph& g, const SolverLimits& limits) {
  require_alpha_capacity(g, limits);
  const BitGraph bg(g);
  return alpha_within(bg, bg.all());
}

VertexSet maximum_stable_set(const Graph& g, const SolverLimits& limits) {
  require_alpha_capacity(g, limits);
  const BitGraph bg(g);
  return detail::to_vertex_set(detail::max_stable_within(bg, bg.all()));
}

VertexSet smallest_maximum_stable_set(const Graph& g, const SolverLimits& limits) {
  require_alpha_capacity(g, limits);
  const BitGraph bg(g);
  int need = alpha_within(bg, bg.all());
  Mask cand = bg.all();
  Mask chosen = 0;
  for (int v = 0; v < g.order() && need > 0; ++v) {
    if (!(cand & detail::bit(v))) continue;
    const Mask rest = cand & ~bg.closed(v);
    if (1 + alpha_within(bg, rest) == need) {
      chosen |= detail::bit(v);
      cand = rest;
      --need;
    } else {
      cand &= ~detail::bit(v);
    }
  }
  return detail::to_vertex_set(chosen);
}

StableSetReport enumerate_maximum_stable_sets(const Graph& g, std::size_t cap, const SolverLimits& limits) {
  if (g.order() > limits.max_omega_vertices) {
    throw CapacityError("maximum stable set enumeration: n=" + std::to_string(g.order()) +
                        " exceeds the vertex cap of " + std::to_string(limits.max_omega_vertices));
  }
  require_alpha_capacity(g, limits);
  const BitGraph bg(g);
  StableSetReport report;
  report.alpha = alpha_within(bg, bg.all());
  const auto sets = OmegaEnumerator(bg, report.alpha, cap).run();
  Mask core = bg.all();
  Mask touched = 0;
  for (Mask s : sets) {
    core &= s;
    touched |= s;
    report.omega.push_back(detail::to_vertex_set(s));
  }
  report.core = detail::to_vertex_set(core);
  report.anticore = detail::to_vertex_set(bg.all() & ~touched);
  return report;
}

StableSetReport enumerate_maximum_stable_sets(const Graph& g, const SolverLimits& limits) {
  return enumerate_maximum_stable_sets(g, limits.max_omega_sets, limits);
}

CoreAnticore core_and_anticore(const Graph& g, const SolverLimits& limits) {
  require_alpha_capacity(g, limits);
  const BitGraph bg(g);
  CoreAnticore out;
  out.alpha = alpha_within(bg, bg.all());
  std::vector<Vertex> core, anticore;
  for (int v = 0; v < g.order(); ++v) {
    if (alpha_within(bg, bg.all() & ~detail::bit(v)) < out.alpha) core.push_back(v);
    if (1 + alpha_within(bg, bg.all() & ~bg.closed(v)) < out.alpha) anticore.push_back(v);
  }
  out.core = VertexSet(std::move(core));
  out.anticore = VertexSet(std::move(anticore));
  return out;
}

}  // namespace kegraph
