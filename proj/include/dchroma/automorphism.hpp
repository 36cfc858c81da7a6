#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dchroma/graph.hpp"
#include "dchroma/permgroup.hpp"

namespace dchroma {

struct SearchOptions {
  /// Splitter steps across all refinements before Error(Timeout).
  std::uint64_t node_budget = 100'000'000;
  /// Wall-clock limit in seconds; 0 disables it.
  double time_budget_secs = 0;
  /// Return as soon as one nontrivial automorphism is known.
  bool stop_at_first = false;
};

struct AutResult {
  std::vector<Permutation> generators;
  BigInt order = 1;
  /// False only when stop_at_first cut the search short; order is then a
  /// lower bound.
  bool complete = true;
};

/// Automorphisms of g preserving every cell of `cells` (one cell id per
/// vertex; empty span = no constraint). Equitable refinement plus
/// individualization, first-path orbit pruning; every generator is checked
/// against the edge set before it is returned.
AutResult automorphism_group(const Graph& g, std::span<const std::uint32_t> cells = {},
                             const SearchOptions& opts = {});

/// Subgroup of Aut(g) fixing every color class setwise.
inline AutResult color_preserving_automorphisms(const Graph& g,
                                                std::span<const std::uint32_t> colors,
                                                const SearchOptions& opts = {}) {
  return automorphism_group(g, colors, opts);
}

}  // namespace dchroma
