#pragma once

#include <cstddef>
#include <optional>

#include "planted/graph.hpp"
#include "planted/isomorphism.hpp"
#include "planted/numeric.hpp"
#include "planted/vertex_cover.hpp"

namespace planted {

struct StatsOptions {
  bool with_automorphisms = true;
  std::size_t automorphism_budget = kDefaultAutomorphismBudget;
  VertexCoverOptions vertex_cover{};
};

struct GraphStats {
  std::size_t num_vertices = 0;
  std::size_t num_edges = 0;
  std::size_t max_degree = 0;
  Rational density;
  Rational max_subgraph_density;
  std::size_t vertex_cover_number = 0;
  std::size_t num_components = 0;
  /// Present when requested through StatsOptions.
  std::optional<BigInt> automorphism_count;
};

/// All invariants exactly. An edgeless graph reports μ = 0 and τ = 0.
/// Budget errors from τ or |Aut| propagate.
GraphStats graph_stats(const Graph& g, const StatsOptions& opts = {});

}  // namespace planted
