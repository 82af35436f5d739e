#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "kegraph/errors.hpp"

namespace kegraph {

struct CliConfig {
  /// analyze, critical, decompose, verify, fuzz or fixtures.
  std::string command;
  std::string input;
  std::string fixture;
  /// json, dot or text.
  std::string format = "json";
  /// Empty means every regular check.
  std::vector<std::string> checks;
  SolverLimits limits;

  std::string gen = "gnp";
  int n = 10;
  int n_min = 1;
  std::vector<double> p{0.5};
  int trials = 100;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  bool shrink = true;
};

/// Exit codes: 0 success, 1 a check failed, 2 bad input or unmet
/// precondition, 3 solver cap exceeded.
int run(const CliConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses the command line and runs it.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kegraph
