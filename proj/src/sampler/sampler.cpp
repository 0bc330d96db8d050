#include "planted/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "planted/error.hpp"

namespace planted {

namespace {

// Visits the selected pairs (i, j), i < j, in row-major order, each pair
// selected independently with probability rate (0 < rate < 1), by jumping
// geometric gaps.
template <class Visit>
void for_each_bernoulli_pair(std::size_t n, double rate, Rng& rng, Visit&& visit) {
  const double log_miss = std::log1p(-rate);
  std::size_t i = 0;
  std::size_t j = 0;  // j == i means "before the first pair of row i"
  for (;;) {
    const double u = 1.0 - rng.uniform();
    const double gap = std::floor(std::log(u) / log_miss);
    auto skip = gap > 1e18 ? std::size_t{1} << 62 : static_cast<std::size_t>(gap);
    ++skip;
    while (i < n && j + skip >= n) {
      skip -= n - 1 - j;
      ++i;
      j = i;
    }
    if (i >= n) return;
    j += skip;
    visit(static_cast<Vertex>(i), static_cast<Vertex>(j));
  }
}

}  // namespace

void validate(const ModelParams& params) {
  if (!(params.q > 0.0 && params.q < 1.0)) fail(ErrorCode::InvalidArgument, "q must lie in (0, 1)");
  if (!(params.p >= params.q && params.p <= 1.0)) {
    fail(ErrorCode::InvalidArgument, "p must lie in [q, 1]");
  }
  if (params.pattern.empty() || !params.pattern.is_pattern()) {
    fail(ErrorCode::InvalidArgument, "pattern must have edges and no isolated vertices");
  }
  if (params.pattern.vertex_count() > params.n) {
    fail(ErrorCode::PatternTooLarge, "pattern has more vertices than n");
  }
}

Observation sample_null(std::size_t n, double q, Rng& rng) {
  if (!(q >= 0.0 && q <= 1.0)) fail(ErrorCode::InvalidArgument, "q must lie in [0, 1]");
  Observation obs(n);
  if (q == 0.0 || n < 2) return obs;
  if (q <= 0.5) {
    for_each_bernoulli_pair(n, q, rng, [&](Vertex u, Vertex v) { obs.set_edge(u, v, true); });
    return obs;
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) obs.set_edge(u, v, true);
  }
  if (q < 1.0) {
    for_each_bernoulli_pair(n, 1.0 - q, rng, [&](Vertex u, Vertex v) { obs.set_edge(u, v, false); });
  }
  return obs;
}

EmbeddedCopy sample_uniform_copy(const Graph& pattern, std::size_t n, Rng& rng) {
  const std::size_t k = pattern.vertex_count();
  if (k > n) {
    fail(ErrorCode::PatternTooLarge,
         "pattern has " + std::to_string(k) + " vertices, host has " + std::to_string(n));
  }
  std::vector<Vertex> pool(n);
  std::iota(pool.begin(), pool.end(), Vertex{0});
  for (std::size_t i = 0; i < k; ++i) std::swap(pool[i], pool[i + rng.below(n - i)]);
  EmbeddedCopy copy;
  copy.vertex_map.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
  copy.edges.reserve(pattern.edge_count());
  for (const Edge& e : pattern.edges()) {
    Vertex a = copy.vertex_map[e.u];
    Vertex b = copy.vertex_map[e.v];
    if (a > b) std::swap(a, b);
    copy.edges.push_back({a, b});
  }
  std::sort(copy.edges.begin(), copy.edges.end());
  return copy;
}

PlantedSample sample_planted(const ModelParams& params, Rng& rng) {
  validate(params);
  PlantedSample out;
  out.copy = sample_uniform_copy(params.pattern, params.n, rng);
  out.observation = sample_null(params.n, params.q, rng);
  for (const Edge& e : out.copy.edges) out.observation.set_edge(e.u, e.v, rng.bernoulli(params.p));
  return out;
}

}  // namespace planted
