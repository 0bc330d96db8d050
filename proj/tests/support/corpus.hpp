#pragma once

// Seeded random graphs for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "planted/graph.hpp"

namespace corpus {

inline planted::Graph random_graph(std::size_t n, double density, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<planted::Edge> edges;
  for (planted::Vertex j = 1; j < n; ++j) {
    for (planted::Vertex i = 0; i < j; ++i) {
      if (coin(gen) < density) edges.push_back({i, j});
    }
  }
  return planted::Graph::from_canonical(n, std::move(edges));
}

/// Random graph with at least one edge and no isolated vertices.
inline planted::Graph random_pattern(std::size_t max_vertices, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  for (std::uint64_t attempt = 0;; ++attempt) {
    const std::size_t n = 2 + gen() % (max_vertices - 1);
    const double density = 0.15 + 0.7 * static_cast<double>(gen() % 1000) / 1000.0;
    planted::Graph g = random_graph(n, density, seed * 7919 + attempt).without_isolated();
    if (!g.empty()) return g;
  }
}

/// Random connected graph: a random tree plus extra random edges.
inline planted::Graph random_connected(std::size_t n, double extra, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<planted::Edge> edges;
  for (planted::Vertex v = 1; v < n; ++v) edges.push_back({static_cast<planted::Vertex>(gen() % v), v});
  for (planted::Vertex j = 1; j < n; ++j) {
    for (planted::Vertex i = 0; i < j; ++i) {
      bool present = false;
      for (const auto& e : edges) present = present || (e.u == i && e.v == j);
      if (!present && coin(gen) < extra) edges.push_back({i, j});
    }
  }
  return planted::Graph::from_canonical(n, std::move(edges));
}

}  // namespace corpus
