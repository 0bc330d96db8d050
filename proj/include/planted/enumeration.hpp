#pragma once

#include <cstddef>
#include <cstdint>

#include "planted/graph.hpp"
#include "planted/numeric.hpp"

namespace planted {

inline constexpr std::size_t kSpanningTreeVertexLimit = 20;
inline constexpr std::uint64_t kDefaultConnectedSetBudget = 50'000'000;

/// Number of spanning trees via the matrix-tree theorem, using fraction-free
/// (Bareiss) elimination on a Laplacian minor. Throws Disconnected or,
/// above kSpanningTreeVertexLimit vertices, BudgetExceeded.
BigInt spanning_tree_count(const Graph& g);

/// Number of connected vertex sets of the given size that contain
/// `anchor`. Each set is produced once by include/exclude branching on the
/// frontier; `budget` caps the number of branch nodes. Graphs are limited
/// to 64 vertices.
std::uint64_t connected_sets_count(const Graph& g, std::size_t size, Vertex anchor,
                                   std::uint64_t budget = kDefaultConnectedSetBudget);

}  // namespace planted
