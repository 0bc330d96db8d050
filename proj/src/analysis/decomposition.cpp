#include "planted/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "planted/error.hpp"
#include "planted/numeric.hpp"

namespace planted {

Decomposition vcd_decompose(const Graph& g, std::size_t parts) {
  if (g.empty()) fail(ErrorCode::EmptyGraph, "cannot decompose a graph without edges");
  if (parts == 0) fail(ErrorCode::InvalidArgument, "number of parts must be >= 1");
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

  const BigInt d_max(g.max_degree());
  const auto m = static_cast<unsigned>(parts);
  // deg >= d_max^{(M−i)/M} is decided as deg^M >= d_max^{M−i}.
  std::vector<BigInt> degree_power(n);
  for (std::size_t v = 0; v < n; ++v) degree_power[v] = boost::multiprecision::pow(BigInt(g.degree(static_cast<Vertex>(v))), m);

  Decomposition out;
  std::vector<std::size_t> layer(n, parts);  // part index of the vertex's layer
  std::size_t cursor = 0;
  for (std::size_t i = 1; i <= parts; ++i) {
    const BigInt bound = boost::multiprecision::pow(d_max, m - static_cast<unsigned>(i));
    std::vector<Vertex> cover;
    while (cursor < n && g.degree(order[cursor]) > 0 && degree_power[order[cursor]] >= bound) {
      cover.push_back(order[cursor]);
      layer[order[cursor]] = i - 1;
      ++cursor;
    }
    std::sort(cover.begin(), cover.end());
    out.covers.push_back(std::move(cover));
  }
  std::vector<std::vector<Edge>> part_edges(parts);
  for (const Edge& e : g.edges()) {
    // An edge belongs to the earliest layer among its endpoints.
    const std::size_t i = std::min(layer[e.u], layer[e.v]);
    part_edges[i].push_back(e);
  }
  for (auto& edges : part_edges) out.parts.push_back(Graph::from_canonical(n, std::move(edges)));
  return out;
}

double vcd_balance_ratio(const Graph& g, const VertexCoverOptions& opts) {
  if (g.edge_count() < 2) fail(ErrorCode::TooFewEdges, "balance ratio needs at least 2 edges");
  const double tau = static_cast<double>(vertex_cover_number(g, opts));
  const double d = static_cast<double>(g.max_degree());
  return std::log(tau * d) / std::log(static_cast<double>(g.edge_count()));
}

double vcd_balance_ratio(const UnbalancedStarsShape& shape) {
  if (shape.edges < 2) fail(ErrorCode::TooFewEdges, "balance ratio needs at least 2 edges");
  const double tau = static_cast<double>(shape.vertex_cover);
  const double d = static_cast<double>(shape.max_degree);
  return std::log(tau * d) / std::log(static_cast<double>(shape.edges));
}

}  // namespace planted
