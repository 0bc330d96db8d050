#include "planted/density.hpp"

#include <algorithm>
#include <optional>

#include "max_flow.hpp"
#include "planted/error.hpp"

namespace planted {

namespace {

struct CutResult {
  std::int64_t value;          // max over S of b·e(S) − a·|S|
  std::vector<Vertex> argmax;  // inclusion-minimal maximiser, sorted
};

// Goldberg's network: cut(S) = b·m·n + 2a|S| − 2b·e(S) for S on the
// source side, so a minimum cut maximises b·e(S) − a·|S|.
CutResult max_excess(const Graph& g, std::int64_t a, std::int64_t b, std::optional<Vertex> forced) {
  const std::size_t n = g.vertex_count();
  const auto m = static_cast<std::int64_t>(g.edge_count());
  const std::size_t source = n;
  const std::size_t sink = n + 1;
  detail::MaxFlow flow(n + 2);
  for (std::size_t v = 0; v < n; ++v) {
    const auto deg = static_cast<std::int64_t>(g.degree(static_cast<Vertex>(v)));
    const bool pinned = forced && *forced == v;
    flow.add_edge(source, v, pinned ? detail::MaxFlow::kInfinite : b * m);
    flow.add_edge(v, sink, b * m + 2 * a - b * deg);
  }
  for (const Edge& e : g.edges()) flow.add_undirected(e.u, e.v, b);
  const std::int64_t cut = flow.run(source, sink);
  const auto side = flow.source_side(source);
  CutResult out;
  for (std::size_t v = 0; v < n; ++v) {
    if (side[v]) out.argmax.push_back(static_cast<Vertex>(v));
  }
  // The pinned arc is never cut, so the identity still holds for S ∋ forced.
  out.value = (b * m * static_cast<std::int64_t>(n) - cut) / 2;
  return out;
}

std::size_t induced_edges(const Graph& g, const std::vector<Vertex>& vs) {
  std::size_t count = 0;
  for (Vertex v : vs) {
    for (Vertex w : g.neighbors(v)) {
      if (w > v && std::binary_search(vs.begin(), vs.end(), w)) ++count;
    }
  }
  return count;
}

bool better_tie(const std::vector<Vertex>& candidate, const std::vector<Vertex>& incumbent) {
  if (incumbent.empty()) return true;
  if (candidate.size() != incumbent.size()) return candidate.size() < incumbent.size();
  return std::lexicographical_compare(candidate.begin(), candidate.end(), incumbent.begin(),
                                      incumbent.end());
}

void require_edges(const Graph& g) {
  if (g.empty()) fail(ErrorCode::EmptyGraph, "graph has no edges");
}

}  // namespace

Rational edge_density(const Graph& g) {
  if (g.vertex_count() == 0) fail(ErrorCode::EmptyGraph, "graph has no vertices");
  return Rational(BigInt(g.edge_count()), BigInt(g.vertex_count()));
}

Rational max_subgraph_density(const Graph& g) {
  require_edges(g);
  Rational best(BigInt(g.edge_count()), BigInt(g.vertex_count()));
  for (;;) {
    const auto a = static_cast<std::int64_t>(numerator(best));
    const auto b = static_cast<std::int64_t>(denominator(best));
    CutResult r = max_excess(g, a, b, std::nullopt);
    if (r.value <= 0) return best;
    best = Rational(BigInt(induced_edges(g, r.argmax)), BigInt(r.argmax.size()));
  }
}

std::vector<Vertex> densest_vertex_set(const Graph& g) {
  const Rational mu = max_subgraph_density(g);
  const auto a = static_cast<std::int64_t>(numerator(mu));
  const auto b = static_cast<std::int64_t>(denominator(mu));
  // Densest sets are the zero-excess sets at ratio μ and form a lattice, so
  // the smallest one is the minimal zero-excess set containing any of its
  // vertices.
  std::vector<Vertex> best;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(static_cast<Vertex>(v)) == 0) continue;
    CutResult r = max_excess(g, a, b, static_cast<Vertex>(v));
    if (r.value == 0 && better_tie(r.argmax, best)) best = std::move(r.argmax);
  }
  return best;
}

Graph densest_subgraph(const Graph& g) {
  const auto vs = densest_vertex_set(g);
  return g.induced(vs);
}

namespace {

struct ExhaustiveBest {
  std::size_t edges = 0;
  std::size_t vertices = 0;
  std::vector<Vertex> set;
};

ExhaustiveBest exhaustive(const Graph& g) {
  require_edges(g);
  const std::size_t n = g.vertex_count();
  if (n > kExhaustiveDensityLimit) {
    fail(ErrorCode::BudgetExceeded, "exhaustive density oracle limited to " +
                                        std::to_string(kExhaustiveDensityLimit) + " vertices");
  }
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1U << e.v;
    adj[e.v] |= 1U << e.u;
  }
  ExhaustiveBest best;
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    std::size_t e2 = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (mask >> v & 1U) e2 += static_cast<std::size_t>(__builtin_popcount(adj[v] & mask));
    }
    const std::size_t edges = e2 / 2;
    const std::size_t verts = static_cast<std::size_t>(__builtin_popcount(mask));
    std::vector<Vertex> set;
    for (std::size_t v = 0; v < n; ++v) {
      if (mask >> v & 1U) set.push_back(static_cast<Vertex>(v));
    }
    if (best.set.empty()) {
      best = {edges, verts, std::move(set)};
      continue;
    }
    const std::size_t lhs = edges * best.vertices;
    const std::size_t rhs = best.edges * verts;
    if (lhs > rhs || (lhs == rhs && better_tie(set, best.set))) best = {edges, verts, std::move(set)};
  }
  return best;
}

}  // namespace

Rational max_subgraph_density_exhaustive(const Graph& g) {
  const auto best = exhaustive(g);
  return Rational(BigInt(best.edges), BigInt(best.vertices));
}

std::vector<Vertex> densest_vertex_set_exhaustive(const Graph& g) { return exhaustive(g).set; }

}  // namespace planted
