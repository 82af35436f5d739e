#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kegraph/graph.hpp"

namespace kegraph::harness {

enum class Provenance { kPublished, kDerived, kTrivial };

std::string_view to_string(Provenance p);

/// One expected scalar of a fixture, e.g. {"alpha", 3, kPublished}. Flags are
/// stored as 0/1.
struct Expectation {
  std::string field;
  int value = 0;
  Provenance provenance = Provenance::kDerived;
};

struct Fixture {
  std::string name;
  std::string description;
  Graph graph;
  /// Drawing label of each vertex id.
  std::vector<std::string> labels;
  std::vector<Expectation> expected;
  /// Known discrepancies between published and computed values.
  std::vector<std::string> notes;

  std::optional<int> expect(std::string_view field) const;
  /// Vertex id of a drawing label; throws InputError if absent.
  Vertex id(std::string_view label) const;
  /// The label→id comment block followed by the edge list.
  std::string to_edge_list() const;
};

/// Published example graphs that reconstruct unambiguously, followed by a few
/// standard small graphs (k2, k3, c4, c5, c6, p4, star3).
const std::vector<Fixture>& fixtures();

/// Throws InputError for an unknown name.
const Fixture& fixture(std::string_view name);

}  // namespace kegraph::harness
