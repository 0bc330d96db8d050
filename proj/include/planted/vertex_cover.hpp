#pragma once

#include <cstddef>

#include "planted/graph.hpp"

namespace planted {

struct VertexCoverOptions {
  /// Largest connected piece, after degree-0/degree-1 reductions, that the
  /// exact branch-and-bound will attempt. At most 64.
  std::size_t max_vertices = 40;
};

/// τ(G), exact. Throws BudgetExceeded when a reduced component exceeds
/// `opts.max_vertices`.
std::size_t vertex_cover_number(const Graph& g, const VertexCoverOptions& opts = {});

/// Size of the cover formed by both endpoints of a greedy maximal matching.
/// Always between τ(G) and 2·τ(G).
std::size_t vertex_cover_upper_bound(const Graph& g);

}  // namespace planted
