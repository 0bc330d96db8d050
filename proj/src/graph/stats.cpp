#include "planted/stats.hpp"

#include "planted/density.hpp"

namespace planted {

GraphStats graph_stats(const Graph& g, const StatsOptions& opts) {
  GraphStats s;
  s.num_vertices = g.vertex_count();
  s.num_edges = g.edge_count();
  s.max_degree = g.max_degree();
  s.density = edge_density(g);
  s.max_subgraph_density = g.empty() ? Rational(0) : max_subgraph_density(g);
  s.vertex_cover_number = vertex_cover_number(g, opts.vertex_cover);
  s.num_components = g.components().size();
  if (opts.with_automorphisms) s.automorphism_count = automorphism_count(g, opts.automorphism_budget);
  return s;
}

}  // namespace planted
