#include "planted/enumeration.hpp"

#include <bit>
#include <string>
#include <vector>

#include "planted/error.hpp"

namespace planted {

BigInt spanning_tree_count(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) fail(ErrorCode::EmptyGraph, "graph has no vertices");
  if (n > kSpanningTreeVertexLimit) {
    fail(ErrorCode::BudgetExceeded, "spanning tree count limited to " +
                                        std::to_string(kSpanningTreeVertexLimit) + " vertices");
  }
  if (g.components().size() != 1) fail(ErrorCode::Disconnected, "graph is not connected");
  if (n == 1) return 1;

  // Laplacian with the last row and column removed.
  const std::size_t m = n - 1;
  std::vector<std::vector<BigInt>> a(m, std::vector<BigInt>(m, 0));
  for (std::size_t v = 0; v < m; ++v) a[v][v] = static_cast<long long>(g.degree(static_cast<Vertex>(v)));
  for (const Edge& e : g.edges()) {
    if (e.u < m && e.v < m) {
      a[e.u][e.v] -= 1;
      a[e.v][e.u] -= 1;
    }
  }

  BigInt previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < m && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == m) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < m; ++i) {
      for (std::size_t j = k + 1; j < m; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / previous;
      }
    }
    previous = a[k][k];
  }
  BigInt det = a[m - 1][m - 1];
  return sign < 0 ? BigInt(-det) : det;
}

std::uint64_t connected_sets_count(const Graph& g, std::size_t size, Vertex anchor,
                                   std::uint64_t budget) {
  using Mask = std::uint64_t;
  const std::size_t n = g.vertex_count();
  if (anchor >= n) fail(ErrorCode::VertexOutOfRange, "anchor vertex out of range");
  if (n > 64) fail(ErrorCode::BudgetExceeded, "connected set enumeration limited to 64 vertices");
  if (size == 0 || size > n) return 0;

  std::vector<Mask> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  std::uint64_t nodes = 0;
  std::uint64_t count = 0;
  // chosen: current set; frontier: addable neighbours; banned: excluded.
  auto grow = [&](auto& self, Mask chosen, Mask frontier, Mask banned, std::size_t have) -> void {
    if (++nodes > budget) {
      fail(ErrorCode::BudgetExceeded, "connected set enumeration exceeded " + std::to_string(budget) +
                                          " branch nodes");
    }
    if (have == size) {
      ++count;
      return;
    }
    if (!frontier) return;
    const auto v = static_cast<std::size_t>(std::countr_zero(frontier));
    const Mask bit = Mask{1} << v;
    const Mask rest = frontier & ~bit;
    self(self, chosen | bit, (rest | adj[v]) & ~(chosen | bit) & ~banned, banned, have + 1);
    self(self, chosen, rest, banned | bit, have);
  };
  const Mask start = Mask{1} << anchor;
  grow(grow, start, adj[anchor], 0, 1);
  return count;
}

}  // namespace planted
