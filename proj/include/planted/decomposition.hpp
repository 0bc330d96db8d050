#pragma once

#include <cstddef>
#include <vector>

#include "planted/families.hpp"
#include "planted/graph.hpp"
#include "planted/vertex_cover.hpp"

namespace planted {

/// Edge-disjoint parts Γ_1..Γ_M of Γ. Every part lives on Γ's vertex set
/// (vertices outside the part are isolated); covers[i] is the vertex cover
/// S_i of parts[i] produced by the construction.
struct Decomposition {
  std::vector<Graph> parts;
  std::vector<std::vector<Vertex>> covers;
};

/// Degree-layered decomposition: vertices sorted by degree (descending,
/// ties by ascending id) are cut into layers S_i = {v : d_max^{(M−i)/M} <=
/// deg(v) < d_max^{(M−i+1)/M}}, and part i takes every edge touching S_i
/// not already taken. Thresholds are compared exactly in integers. Then
/// τ(Γ_i)·d_max(Γ_i) <= 2|e(Γ)|·d_max(Γ)^{1/M}. Throws EmptyGraph, or
/// InvalidArgument when M == 0.
Decomposition vcd_decompose(const Graph& g, std::size_t parts);

/// log(τ·d_max)/log|e|. Throws TooFewEdges when |e| < 2.
double vcd_balance_ratio(const Graph& g, const VertexCoverOptions& opts = {});
/// Same ratio for unbalanced_stars(k) from its closed-form invariants.
double vcd_balance_ratio(const UnbalancedStarsShape& shape);

}  // namespace planted
