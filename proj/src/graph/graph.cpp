#include "planted/graph.hpp"

#include <algorithm>
#include <numeric>

#include "planted/error.hpp"

namespace planted {

Graph Graph::from_canonical(std::size_t vertex_count, std::vector<Edge> edges) {
  Graph g;
  g.vertex_count_ = vertex_count;
  for (Edge& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  g.edges_ = std::move(edges);

  std::vector<std::size_t> deg(vertex_count, 0);
  for (const Edge& e : g.edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  g.offsets_.assign(vertex_count + 1, 0);
  for (std::size_t v = 0; v < vertex_count; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adjacency_.resize(g.offsets_.back());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : g.edges_) {
    g.adjacency_[fill[e.u]++] = e.v;
    g.adjacency_[fill[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }
  return g;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v < vertex_count_; ++v) best = std::max(best, degree(static_cast<Vertex>(v)));
  return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  if (u >= vertex_count_ || v >= vertex_count_) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::is_pattern() const noexcept {
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    if (degree(static_cast<Vertex>(v)) == 0) return false;
  }
  return true;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::vector<Vertex> position(vertex_count_, static_cast<Vertex>(-1));
  for (std::size_t i = 0; i < vertices.size(); ++i) position[vertices[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const Edge& e : edges_) {
    if (position[e.u] != static_cast<Vertex>(-1) && position[e.v] != static_cast<Vertex>(-1)) {
      edges.push_back({position[e.u], position[e.v]});
    }
  }
  return from_canonical(vertices.size(), std::move(edges));
}

Graph Graph::without_isolated() const {
  std::vector<Vertex> keep;
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    if (degree(static_cast<Vertex>(v)) > 0) keep.push_back(static_cast<Vertex>(v));
  }
  return induced(keep);
}

std::vector<std::vector<Vertex>> Graph::components() const {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(vertex_count_, 0);
  std::vector<Vertex> stack;
  for (std::size_t start = 0; start < vertex_count_; ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> comp;
    stack.push_back(static_cast<Vertex>(start));
    seen[start] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Graph from_edge_list(std::size_t vertex_count,
                     std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    if (a >= vertex_count || b >= vertex_count) {
      fail(ErrorCode::VertexOutOfRange, "pair (" + std::to_string(a) + "," + std::to_string(b) +
                                            ") outside [0," + std::to_string(vertex_count) + ")");
    }
    if (a == b) fail(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(a));
    edges.push_back({static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b))});
  }
  std::vector<Edge> sorted = edges;
  std::sort(sorted.begin(), sorted.end());
  if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
    fail(ErrorCode::DuplicateEdge,
         "edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ") listed twice");
  }
  return Graph::from_canonical(vertex_count, std::move(sorted));
}

Graph from_edge_list(std::size_t vertex_count,
                     std::initializer_list<std::pair<std::size_t, std::size_t>> pairs) {
  return from_edge_list(vertex_count, std::span<const std::pair<std::size_t, std::size_t>>(
                                          pairs.begin(), pairs.size()));
}

}  // namespace planted
