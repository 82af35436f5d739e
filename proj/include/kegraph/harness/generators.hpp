#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "kegraph/graph.hpp"

namespace kegraph::harness {

enum class GeneratorKind { kTree, kBipartite, kKeSynth, kGnp, kCycle, kPath, kComplete };

std::string_view to_string(GeneratorKind kind);
/// Accepts "tree", "bipartite", "ke" / "ke_synth", "gnp", "cycle", "path", "complete".
std::optional<GeneratorKind> parse_generator_kind(std::string_view name);

struct GeneratorConfig {
  GeneratorKind kind = GeneratorKind::kGnp;
  /// Vertex count; for bipartite, the size of the first side.
  int n = 8;
  /// Second side of a bipartite graph.
  int n2 = 0;
  /// Edge probability for gnp and bipartite; inside-H and extra cut edge
  /// probability for ke_synth.
  double p = 0.5;
  std::uint64_t seed = 0;
};

/// Throws InputError on an invalid configuration.
void validate(const GeneratorConfig& cfg);

/// Deterministic per configuration (seed included).
///   tree      - uniform labeled tree from a random Prüfer sequence
///   bipartite - G(n, n2, p)
///   ke_synth  - stable S plus H with |S| >= |H|, an injective matching from
///               H into S, random edges inside H and extra cut edges; the
///               labels are shuffled. KE by construction (asserted).
///   gnp       - Erdős–Rényi G(n, p)
///   cycle / path / complete - C_n, P_n, K_n (p and seed ignored)
Graph generate(const GeneratorConfig& cfg);

/// Tree with the given Prüfer sequence (labels in 0..len+1).
Graph tree_from_pruefer(std::span<const int> sequence);

Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);

}  // namespace kegraph::harness
