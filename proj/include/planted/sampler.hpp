#pragma once

#include <cstddef>
#include <vector>

#include "planted/graph.hpp"
#include "planted/observation.hpp"
#include "planted/rng.hpp"

namespace planted {

/// Testing instance: H0 is G(n, q); H1 plants a uniform copy of `pattern`
/// whose edges appear with probability p, all other pairs with q.
struct ModelParams {
  std::size_t n = 0;
  double p = 0.0;
  double q = 0.0;
  Graph pattern;
};

/// Throws InvalidArgument unless 0 < q < 1, q <= p <= 1, the pattern has
/// edges and no isolated vertices, and |v(pattern)| <= n. p == q is
/// accepted as the degenerate plant.
void validate(const ModelParams& params);

struct EmbeddedCopy {
  std::vector<Vertex> vertex_map;  // pattern vertex -> host vertex
  std::vector<Edge> edges;         // image edges, canonical and sorted
};

/// Each of the C(n,2) pairs independently present with probability q.
Observation sample_null(std::size_t n, double q, Rng& rng);

/// Uniform copy of `pattern` in K_n via a uniform injective vertex map.
/// Throws PatternTooLarge when |v(pattern)| > n.
EmbeddedCopy sample_uniform_copy(const Graph& pattern, std::size_t n, Rng& rng);

struct PlantedSample {
  Observation observation;
  EmbeddedCopy copy;
};

/// Draws the copy, then a null graph, then redraws the copy's pairs with
/// probability p.
PlantedSample sample_planted(const ModelParams& params, Rng& rng);

}  // namespace planted
