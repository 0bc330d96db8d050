#include "planted/observation.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

namespace planted {

Observation::Observation(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

std::size_t Observation::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v < n_; ++v) best = std::max(best, degree(static_cast<Vertex>(v)));
  return best;
}

std::size_t Observation::edge_count() const noexcept {
  std::size_t twice = 0;
  for (auto w : bits_) twice += static_cast<std::size_t>(std::popcount(w));
  return twice / 2;
}

Graph Observation::to_graph() const {
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n_; ++u) {
    const auto r = row(static_cast<Vertex>(u));
    for (std::size_t w = 0; w < words_; ++w) {
      for (std::uint64_t bits = r[w]; bits; bits &= bits - 1) {
        const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        if (v > u) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
      }
    }
  }
  return Graph::from_canonical(n_, std::move(edges));
}

Observation Observation::from_graph(const Graph& g) {
  Observation obs(g.vertex_count());
  for (const Edge& e : g.edges()) obs.set_edge(e.u, e.v, true);
  return obs;
}

void write_observation(std::ostream& out, const Observation& obs) { write_edge_list(out, obs.to_graph()); }

Observation read_observation(std::istream& in) { return Observation::from_graph(read_edge_list(in)); }

}  // namespace planted
