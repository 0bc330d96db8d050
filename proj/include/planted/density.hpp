#pragma once

#include <vector>

#include "planted/graph.hpp"
#include "planted/numeric.hpp"

namespace planted {

/// η(G) = |e(G)| / |v(G)|.
Rational edge_density(const Graph& g);

/// μ(G): the largest edge/vertex ratio over all non-empty subgraphs.
///
/// Exact. Uses Dinkelbach iterations over Goldberg's cut network: at the
/// current ratio a/b a minimum cut decides whether some vertex set S has
/// b·e(S) − a·|S| > 0, and if so S supplies the next, strictly larger,
/// ratio. Throws EmptyGraph when g has no edges.
Rational max_subgraph_density(const Graph& g);

/// Vertex set of a densest subgraph of g, sorted ascending. Among all
/// densest vertex sets the one with fewest vertices is returned, ties
/// going to the lexicographically smallest sorted list.
std::vector<Vertex> densest_vertex_set(const Graph& g);

/// Subgraph induced by `densest_vertex_set(g)`, relabelled so that the
/// i-th smallest original vertex becomes vertex i.
Graph densest_subgraph(const Graph& g);

/// Exhaustive-subset oracles. Same tie-breaking as above. Limited to
/// graphs with at most `kExhaustiveDensityLimit` vertices.
inline constexpr std::size_t kExhaustiveDensityLimit = 14;
Rational max_subgraph_density_exhaustive(const Graph& g);
std::vector<Vertex> densest_vertex_set_exhaustive(const Graph& g);

}  // namespace planted
