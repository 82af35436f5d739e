#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "kegraph/errors.hpp"
#include "kegraph/harness/checks.hpp"
#include "kegraph/harness/generators.hpp"

namespace kegraph::harness {

struct Campaign {
  /// kind, p and seed are used as given; n is the largest order drawn.
  GeneratorConfig gen;
  /// Smallest order drawn; each trial picks n uniformly in [n_min, gen.n].
  int n_min = 1;
  /// When non-empty, each trial picks p uniformly from this grid.
  std::vector<double> p_grid;
  int trials = 100;
  std::vector<std::string> checks;
  SolverLimits limits;
  /// 0 picks the hardware concurrency.
  unsigned threads = 1;
  bool shrink = true;
};

struct Tally {
  int pass = 0;
  int fail = 0;
  int na = 0;
};

struct Witness {
  std::string check_id;
  int trial = 0;
  std::string detail;
  /// Edge lists of the shrunk and the generated graph.
  std::string graph;
  std::string original;
};

struct FuzzSummary {
  Campaign campaign;
  std::map<std::string, Tally> per_check;
  /// Ordered by (trial, catalog order of the check).
  std::vector<Witness> witnesses;

  int failures() const;
};

/// The graph of one trial; depends only on the campaign and the index.
Graph trial_graph(const Campaign& c, int trial);

/// Throws InputError on an invalid campaign. The summary does not depend on
/// the thread count.
FuzzSummary fuzz(const Campaign& c);

nlohmann::json to_json(const FuzzSummary& s);

}  // namespace kegraph::harness
