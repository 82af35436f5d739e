#include "kegraph/matching.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "bitgraph.hpp"

namespace kegraph {

namespace {

// Edmonds' algorithm with explicit blossom bases (no contraction of the
// graph itself). match[v] == -1 marks an exposed vertex.
class Blossom {
 public:
  explicit Blossom(const Graph& g)
      : g_(g),
        n_(static_cast<std::size_t>(g.order())),
        match_(n_, -1),
        parent_(n_),
        base_(n_),
        used_(n_),
        in_blossom_(n_) {}

  std::vector<int> run() {
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (match_[at(v)] != -1) continue;
      for (Vertex u = find_augmenting_path(v); u != -1;) {
        const Vertex pv = parent_[at(u)];
        const Vertex next = match_[at(pv)];
        match_[at(u)] = pv;
        match_[at(pv)] = u;
        u = next;
      }
    }
    return match_;
  }

 private:
  static std::size_t at(Vertex v) { return static_cast<std::size_t>(v); }

  Vertex lowest_common_base(Vertex a, Vertex b) const {
    std::vector<bool> seen(n_, false);
    for (;;) {
      a = base_[at(a)];
      seen[at(a)] = true;
      if (match_[at(a)] == -1) break;
      a = parent_[at(match_[at(a)])];
    }
    for (;;) {
      b = base_[at(b)];
      if (seen[at(b)]) return b;
      b = parent_[at(match_[at(b)])];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[at(v)] != b) {
      in_blossom_[at(base_[at(v)])] = true;
      in_blossom_[at(base_[at(match_[at(v)])])] = true;
      parent_[at(v)] = child;
      child = match_[at(v)];
      v = parent_[at(match_[at(v)])];
    }
  }

  Vertex find_augmenting_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = static_cast<Vertex>(i);
    used_[at(root)] = true;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[at(v)] == base_[at(to)] || match_[at(v)] == to) continue;
        if (to == root || (match_[at(to)] != -1 && parent_[at(match_[at(to)])] != -1)) {
          // Odd cycle: shrink it into a blossom with base cur.
          const Vertex cur = lowest_common_base(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (!in_blossom_[at(base_[i])]) continue;
            base_[i] = cur;
            if (!used_[i]) {
              used_[i] = true;
              q.push(static_cast<Vertex>(i));
            }
          }
        } else if (parent_[at(to)] == -1) {
          parent_[at(to)] = v;
          if (match_[at(to)] == -1) return to;
          used_[at(match_[at(to)])] = true;
          q.push(match_[at(to)]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<Vertex> match_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

Matching from_mates(const std::vector<Vertex>& mate) {
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < mate.size(); ++v) {
    if (mate[v] > static_cast<Vertex>(v)) edges.push_back(Edge{static_cast<Vertex>(v), mate[v]});
  }
  return Matching(EdgeSet(std::move(edges)));
}

using detail::Mask;

int bruteforce_mu(const detail::BitGraph& g, Mask free) {
  if (!free) return 0;
  const int v = detail::lowest(free);
  const Mask rest = free & ~detail::bit(v);
  int best = bruteforce_mu(g, rest);
  for (Mask r = g.neighbors(v) & rest; r; r &= r - 1) {
    best = std::max(best, 1 + bruteforce_mu(g, rest & ~detail::bit(detail::lowest(r))));
  }
  return best;
}

class MatchingEnumerator {
 public:
  MatchingEnumerator(const Graph& g, int mu, std::size_t cap)
      : g_(g), cap_(cap), unmatched_budget_(g.order() - 2 * mu), mate_(static_cast<std::size_t>(g.order()), -2) {}

  std::vector<Matching> run() {
    visit(0);
    return found_;
  }

 private:
  // mate_: -2 undecided, -1 left exposed, otherwise partner.
  void visit(Vertex v) {
    while (v < g_.order() && mate_[static_cast<std::size_t>(v)] != -2) ++v;
    if (v == g_.order()) {
      if (found_.size() == cap_) {
        throw CapacityError("maximum matching enumeration exceeded the cap of " + std::to_string(cap_));
      }
      found_.push_back(from_mates(mate_));
      return;
    }
    auto& mv = mate_[static_cast<std::size_t>(v)];
    for (Vertex w : g_.neighbors(v)) {
      auto& mw = mate_[static_cast<std::size_t>(w)];
      if (mw != -2) continue;
      mv = w;
      mw = v;
      visit(v + 1);
      mw = -2;
    }
    if (unmatched_budget_ > 0) {
      --unmatched_budget_;
      mv = -1;
      visit(v + 1);
      ++unmatched_budget_;
    }
    mv = -2;
  }

  const Graph& g_;
  std::size_t cap_;
  int unmatched_budget_;
  std::vector<Vertex> mate_;
  std::vector<Matching> found_;
};

class PerfectMatchingSearch {
 public:
  explicit PerfectMatchingSearch(const Graph& g) : g_(g), mate_(static_cast<std::size_t>(g.order()), -1) {}

  std::vector<Matching> run() {
    visit(0);
    return found_;
  }

 private:
  bool stranded() const {
    // Some exposed vertex has no exposed neighbor left.
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (mate_[static_cast<std::size_t>(v)] != -1) continue;
      bool ok = false;
      for (Vertex w : g_.neighbors(v)) {
        if (mate_[static_cast<std::size_t>(w)] == -1) {
          ok = true;
          break;
        }
      }
      if (!ok) return true;
    }
    return false;
  }

  void visit(Vertex v) {
    if (found_.size() >= 2) return;
    while (v < g_.order() && mate_[static_cast<std::size_t>(v)] != -1) ++v;
    if (v == g_.order()) {
      found_.push_back(from_mates(mate_));
      return;
    }
    if (stranded()) return;
    for (Vertex w : g_.neighbors(v)) {
      if (mate_[static_cast<std::size_t>(w)] != -1) continue;
      mate_[static_cast<std::size_t>(v)] = w;
      mate_[static_cast<std::size_t>(w)] = v;
      visit(v + 1);
      mate_[static_cast<std::size_t>(v)] = -1;
      mate_[static_cast<std::size_t>(w)] = -1;
      if (found_.size() >= 2) return;
    }
  }

  const Graph& g_;
  std::vector<Vertex> mate_;
  std::vector<Matching> found_;
};

}  // namespace

Matching maximum_matching(const Graph& g) { return from_mates(Blossom(g).run()); }

int matching_number(const Graph& g) { return static_cast<int>(maximum_matching(g).size()); }

int maximum_matching_bruteforce(const Graph& g, const SolverLimits& limits) {
  if (g.order() > limits.max_bruteforce_matching_vertices) {
    throw CapacityError("brute-force matching: n=" + std::to_string(g.order()) + " exceeds the cap of " +
                        std::to_string(limits.max_bruteforce_matching_vertices));
  }
  const detail::BitGraph bg(g);
  return bruteforce_mu(bg, bg.all());
}

std::vector<Matching> enumerate_maximum_matchings(const Graph& g, std::size_t cap) {
  return MatchingEnumerator(g, matching_number(g), cap).run();
}

PerfectMatchingStatus perfect_matching_status(const Graph& g) {
  PerfectMatchingStatus status;
  if (g.order() == 0) {
    status.count = PerfectMatchingCount::kUnique;
    status.witnesses.emplace_back();
    return status;
  }
  if (g.order() % 2 != 0) return status;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) return status;
  }
  status.witnesses = PerfectMatchingSearch(g).run();
  status.count = static_cast<PerfectMatchingCount>(std::min<std::size_t>(status.witnesses.size(), 2));
  return status;
}

EdgeSet forced_matching_edges(const Graph& g, const SolverLimits& limits) {
  const int mu = matching_number(g);
  std::vector<Edge> forced;
  for (const auto& e : g.edges()) {
    if (matching_number(delete_edge(g, e)) < mu) forced.push_back(e);
  }
  EdgeSet by_definition(std::move(forced));
  if (g.order() <= limits.max_bruteforce_matching_vertices) {
    EdgeSet common = g.edge_set();
    for (const auto& m : enumerate_maximum_matchings(g)) common = common.intersect(m.edges());
    if (common != by_definition) {
      throw InternalError("forced matching edges: deletion test and intersection of maximum matchings disagree");
    }
  }
  return by_definition;
}

MatchingReport matching_report(const Graph& g, const SolverLimits& limits) {
  MatchingReport report;
  report.witness = maximum_matching(g);
  report.mu = static_cast<int>(report.witness.size());
  report.perfect_matching_count = perfect_matching_status(g).count;
  report.forced_edges = forced_matching_edges(g, limits);
  return report;
}

bool is_maximal_matching(const Graph& g, const EdgeSet& m) {
  if (!m.is_matching() || !m.is_subset_of(g.edge_set())) return false;
  const VertexSet covered = m.endpoints();
  for (const auto& e : g.edges()) {
    if (!covered.contains(e.u) && !covered.contains(e.v)) return false;
  }
  return true;
}

}  // namespace kegraph
