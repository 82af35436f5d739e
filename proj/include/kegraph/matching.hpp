#pragma once

#include <cstddef>
#include <vector>

#include "kegraph/errors.hpp"
#include "kegraph/graph.hpp"

namespace kegraph {

/// Number of perfect matchings, saturated at two.
enum class PerfectMatchingCount { kNone = 0, kUnique = 1, kMany = 2 };

struct PerfectMatchingStatus {
  PerfectMatchingCount count = PerfectMatchingCount::kNone;
  /// Up to two distinct perfect matchings, in discovery order.
  std::vector<Matching> witnesses;

  bool unique() const { return count == PerfectMatchingCount::kUnique; }
};

struct MatchingReport {
  int mu = 0;
  Matching witness;
  PerfectMatchingCount perfect_matching_count = PerfectMatchingCount::kNone;
  /// Edges in every maximum matching.
  EdgeSet forced_edges;
};

/// Maximum matching via Edmonds' blossom algorithm, O(n^3). Deterministic:
/// vertices and neighbors are scanned in increasing id order.
Matching maximum_matching(const Graph& g);
int matching_number(const Graph& g);

/// μ by exhaustive search over all matchings. Throws CapacityError above
/// limits.max_bruteforce_matching_vertices.
int maximum_matching_bruteforce(const Graph& g, const SolverLimits& limits = {});

/// Every maximum matching, in lexicographic order of the lowest-vertex
/// choices. Throws CapacityError when more than `cap` exist.
std::vector<Matching> enumerate_maximum_matchings(const Graph& g, std::size_t cap = 1'000'000);

/// Backtracking with early exit after the second perfect matching. The
/// empty graph has exactly one (empty) perfect matching.
PerfectMatchingStatus perfect_matching_status(const Graph& g);

/// Edges e with μ(G-e) < μ(G). For n up to
/// limits.max_bruteforce_matching_vertices the intersection of all maximum
/// matchings is also computed, and a disagreement raises InternalError.
EdgeSet forced_matching_edges(const Graph& g, const SolverLimits& limits = {});

MatchingReport matching_report(const Graph& g, const SolverLimits& limits = {});

/// True iff m is a matching of g that no edge of g can extend.
bool is_maximal_matching(const Graph& g, const EdgeSet& m);

}  // namespace kegraph
