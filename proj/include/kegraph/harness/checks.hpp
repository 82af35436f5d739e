#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kegraph/errors.hpp"
#include "kegraph/graph.hpp"
#include "kegraph/harness/graph_facts.hpp"

namespace kegraph::harness {

enum class CheckStatus { kPass, kFail, kNotApplicable };

std::string_view to_string(CheckStatus s);

struct CheckVerdict {
  std::string check_id;
  CheckStatus status = CheckStatus::kNotApplicable;
  /// What failed (Fail) or why the check does not apply (NotApplicable).
  std::string detail;
  /// Edge list of the graph, set on Fail so the failure can be replayed.
  std::string witness;
};

struct CheckInfo {
  std::string id;
  std::string statement;
  /// Intentionally unguarded variants that must fail on known graphs.
  bool negative_control = false;
};

/// Every check, in catalog order; negative controls last.
const std::vector<CheckInfo>& check_catalog();
/// Ids of the regular (non negative-control) checks.
std::vector<std::string> default_check_ids();
bool is_known_check(std::string_view id);
/// Splits "A,B,C" and validates each id; throws InputError on unknown ids.
std::vector<std::string> parse_check_list(std::string_view csv);

/// Evaluates one statement on one graph. Unmet hypotheses and capacity
/// errors yield NotApplicable. Throws InputError for unknown ids.
CheckVerdict check(GraphFacts& facts, std::string_view id);
CheckVerdict check(const Graph& g, std::string_view id, const SolverLimits& limits = {});

/// Removes edges, then vertices, one at a time while the check keeps
/// failing, until no single deletion preserves the failure. A check only
/// fails when its hypotheses hold, so the graph class is preserved.
Graph shrink_failure(const Graph& g, std::string_view id, const SolverLimits& limits = {});

}  // namespace kegraph::harness
