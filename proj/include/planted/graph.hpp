#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace planted {

using Vertex = std::uint32_t;

/// Unordered vertex pair stored canonically with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices [0, vertex_count).
///
/// Edges are kept sorted in canonical order; neighbour lists are sorted
/// ascending. Isolated vertices are allowed here. Pattern graphs (the
/// planted graph and its subgraphs) additionally have none, see
/// `is_pattern()`.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from pairs that are already known to be valid.
  /// Pairs may be given in either orientation. Use `from_edge_list` for
  /// untrusted input.
  static Graph from_canonical(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const noexcept;
  bool has_edge(Vertex u, Vertex v) const noexcept;

  /// True when every vertex lies on at least one edge.
  bool is_pattern() const noexcept;

  /// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
  Graph induced(std::span<const Vertex> vertices) const;

  /// Drops isolated vertices and relabels the rest in ascending order.
  Graph without_isolated() const;

  /// Vertex sets of the connected components, each sorted, ordered by
  /// smallest member. Isolated vertices form singleton components.
  std::vector<std::vector<Vertex>> components() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> adjacency_;
};

/// Validating constructor. Throws Error with SelfLoop, DuplicateEdge or
/// VertexOutOfRange.
Graph from_edge_list(std::size_t vertex_count,
                     std::span<const std::pair<std::size_t, std::size_t>> pairs);
Graph from_edge_list(std::size_t vertex_count,
                     std::initializer_list<std::pair<std::size_t, std::size_t>> pairs);

/// Edge-list text format:
///
///     # comment
///     n 4
///     0 1
///     1 2   # trailing comments are fine
///
/// The header line `n <vertex_count>` must come first (after comments).
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace planted
