#include "planted/vertex_cover.hpp"

#include <bit>
#include <cstdint>
#include <deque>
#include <string>
#include <vector>

#include "planted/error.hpp"

namespace planted {

namespace {

using Mask = std::uint64_t;

class KernelSolver {
 public:
  explicit KernelSolver(std::vector<Mask> adjacency) : adj_(std::move(adjacency)) {}

  std::size_t solve() {
    const std::size_t n = adj_.size();
    const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    best_ = n;
    branch(all, 0);
    return best_;
  }

 private:
  std::size_t degree(Mask alive, std::size_t v) const {
    return static_cast<std::size_t>(std::popcount(adj_[v] & alive));
  }

  // Greedy maximal matching: every matched edge needs its own cover vertex.
  std::size_t matching_bound(Mask alive) const {
    std::size_t size = 0;
    Mask free = alive;
    while (free) {
      const auto v = static_cast<std::size_t>(std::countr_zero(free));
      free &= free - 1;
      const Mask nb = adj_[v] & free;
      if (nb) {
        free &= ~(nb & -nb);
        ++size;
      }
    }
    return size;
  }

  void branch(Mask alive, std::size_t cost) {
    // Degree-0 and degree-1 reductions to a fixed point.
    for (bool changed = true; changed;) {
      changed = false;
      for (Mask rest = alive; rest; rest &= rest - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(rest));
        if (!(alive >> v & 1U)) continue;
        const std::size_t d = degree(alive, v);
        if (d == 0) {
          alive &= ~(Mask{1} << v);
          changed = true;
        } else if (d == 1) {
          const auto w = static_cast<std::size_t>(std::countr_zero(adj_[v] & alive));
          alive &= ~(Mask{1} << v) & ~(Mask{1} << w);
          ++cost;
          changed = true;
        }
      }
    }
    if (cost >= best_) return;
    if (!alive) {
      best_ = cost;
      return;
    }
    if (cost + matching_bound(alive) >= best_) return;

    std::size_t pivot = 0;
    std::size_t pivot_degree = 0;
    for (Mask rest = alive; rest; rest &= rest - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(rest));
      const std::size_t d = degree(alive, v);
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    const Mask pivot_bit = Mask{1} << pivot;
    branch(alive & ~pivot_bit, cost + 1);
    const Mask nb = adj_[pivot] & alive;
    branch(alive & ~pivot_bit & ~nb, cost + pivot_degree);
  }

  std::vector<Mask> adj_;
  std::size_t best_ = 0;
};

}  // namespace

std::size_t vertex_cover_number(const Graph& g, const VertexCoverOptions& opts) {
  if (opts.max_vertices > 64) fail(ErrorCode::InvalidArgument, "vertex cover budget is at most 64");
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> deg(n);
  std::vector<char> removed(n, 0);
  std::deque<Vertex> queue;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = g.degree(static_cast<Vertex>(v));
    if (deg[v] <= 1) queue.push_back(static_cast<Vertex>(v));
  }
  std::size_t cover = 0;
  auto remove = [&](Vertex v) {
    removed[v] = 1;
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      if (--deg[w] <= 1) queue.push_back(w);
    }
  };
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    if (removed[v]) continue;
    if (deg[v] == 0) {
      removed[v] = 1;
    } else if (deg[v] == 1) {
      Vertex partner = v;
      for (Vertex w : g.neighbors(v)) {
        if (!removed[w]) partner = w;
      }
      removed[v] = 1;
      remove(partner);
      ++cover;
    }
  }

  std::vector<Vertex> kernel;
  for (std::size_t v = 0; v < n; ++v) {
    if (!removed[v]) kernel.push_back(static_cast<Vertex>(v));
  }
  const Graph rest = g.induced(kernel);
  for (const auto& component : rest.components()) {
    if (component.size() < 2) continue;
    if (component.size() > opts.max_vertices) {
      fail(ErrorCode::BudgetExceeded, "vertex cover kernel component has " +
                                          std::to_string(component.size()) + " vertices, budget " +
                                          std::to_string(opts.max_vertices));
    }
    const Graph piece = rest.induced(component);
    std::vector<Mask> adj(piece.vertex_count(), 0);
    for (const Edge& e : piece.edges()) {
      adj[e.u] |= Mask{1} << e.v;
      adj[e.v] |= Mask{1} << e.u;
    }
    cover += KernelSolver(std::move(adj)).solve();
  }
  return cover;
}

std::size_t vertex_cover_upper_bound(const Graph& g) {
  std::vector<char> matched(g.vertex_count(), 0);
  std::size_t size = 0;
  for (const Edge& e : g.edges()) {
    if (!matched[e.u] && !matched[e.v]) {
      matched[e.u] = matched[e.v] = 1;
      size += 2;
    }
  }
  return size;
}

}  // namespace planted
