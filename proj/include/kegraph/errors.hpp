#pragma once

#include <stdexcept>
#include <string>

namespace kegraph {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad edge list, out-of-range vertex, self-loop, unknown id.
class InputError : public Error {
 public:
  using Error::Error;
};

/// A solver limit (vertex cap, enumeration cap) was exceeded.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// The operation's mathematical precondition does not hold (e.g. graph not KE).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A postcondition or cross-check failed. Indicates a bug or a counterexample.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// Solver caps. Exceeding any of them raises CapacityError, never a silent
/// approximation.
struct SolverLimits {
  int max_alpha_vertices = 40;
  int max_omega_vertices = 20;
  std::size_t max_omega_sets = 100000;
  int max_odd_cycle_vertices = 14;
  int max_bruteforce_matching_vertices = 12;
};

}  // namespace kegraph
