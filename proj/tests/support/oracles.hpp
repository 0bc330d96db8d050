#pragma once

// Brute-force reference implementations used to check the library. They
// share no code with it beyond the Graph container and exact numerics.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "planted/graph.hpp"
#include "planted/numeric.hpp"

namespace oracle {

using planted::BigInt;
using planted::Edge;
using planted::Graph;
using planted::Rational;
using planted::Vertex;

inline std::size_t induced_edge_count(const Graph& g, std::uint32_t mask) {
  std::size_t count = 0;
  for (const Edge& e : g.edges()) {
    if ((mask >> e.u & 1U) && (mask >> e.v & 1U)) ++count;
  }
  return count;
}

/// max |e(S)|/|S| over nonempty vertex subsets.
inline Rational max_density(const Graph& g) {
  Rational best = 0;
  const std::size_t n = g.vertex_count();
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    Rational value(BigInt(induced_edge_count(g, mask)), BigInt(std::popcount(mask)));
    best = std::max(best, value);
  }
  return best;
}

/// All densest vertex sets, each sorted.
inline std::vector<std::vector<Vertex>> densest_sets(const Graph& g) {
  const Rational mu = max_density(g);
  std::vector<std::vector<Vertex>> out;
  const std::size_t n = g.vertex_count();
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    if (Rational(BigInt(induced_edge_count(g, mask)), BigInt(std::popcount(mask))) != mu) continue;
    std::vector<Vertex> set;
    for (std::size_t v = 0; v < n; ++v) {
      if (mask >> v & 1U) set.push_back(static_cast<Vertex>(v));
    }
    out.push_back(set);
  }
  return out;
}

inline std::size_t vertex_cover(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::size_t best = n;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size >= best) continue;
    bool covers = true;
    for (const Edge& e : g.edges()) covers = covers && ((mask >> e.u & 1U) || (mask >> e.v & 1U));
    if (covers) best = size;
  }
  return best;
}

inline std::uint64_t automorphisms(const Graph& g) {
  std::vector<Vertex> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (const Edge& e : g.edges()) ok = ok && g.has_edge(perm[e.u], perm[e.v]);
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

/// Calls visit(map) for every injective map [0,k) -> [0,n).
inline void for_each_injection(std::size_t k, std::size_t n, const std::function<void(const std::vector<Vertex>&)>& visit) {
  std::vector<Vertex> map(k);
  std::vector<char> used(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t depth) {
    if (depth == k) {
      visit(map);
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      map[depth] = static_cast<Vertex>(v);
      rec(depth + 1);
      used[v] = 0;
    }
  };
  rec(0);
}

inline std::vector<Edge> image(const Graph& h, const std::vector<Vertex>& map) {
  std::vector<Edge> out;
  for (const Edge& e : h.edges()) {
    Vertex a = map[e.u];
    Vertex b = map[e.v];
    if (a > b) std::swap(a, b);
    out.push_back({a, b});
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Distinct edge sets of copies of h inside g.
inline std::set<std::vector<Edge>> copies(const Graph& h, const Graph& g) {
  std::set<std::vector<Edge>> out;
  if (h.vertex_count() > g.vertex_count()) return out;
  for_each_injection(h.vertex_count(), g.vertex_count(), [&](const std::vector<Vertex>& map) {
    auto edges = image(h, map);
    bool inside = true;
    for (const Edge& e : edges) inside = inside && g.has_edge(e.u, e.v);
    if (inside) out.insert(std::move(edges));
  });
  return out;
}

/// Distinct edge sets of copies of h in K_n.
inline std::set<std::vector<Edge>> copies_in_complete(const Graph& h, std::size_t n) {
  std::set<std::vector<Edge>> out;
  for_each_injection(h.vertex_count(), n, [&](const std::vector<Vertex>& map) { out.insert(image(h, map)); });
  return out;
}

inline bool connected(const Graph& g, const std::vector<Vertex>& vs) {
  if (vs.empty()) return false;
  std::vector<Vertex> seen{vs[0]};
  for (std::size_t i = 0; i < seen.size(); ++i) {
    for (Vertex w : g.neighbors(seen[i])) {
      if (std::find(vs.begin(), vs.end(), w) != vs.end() && std::find(seen.begin(), seen.end(), w) == seen.end()) {
        seen.push_back(w);
      }
    }
  }
  return seen.size() == vs.size();
}

inline std::uint64_t connected_sets(const Graph& g, std::size_t size, Vertex anchor) {
  std::uint64_t count = 0;
  const std::size_t n = g.vertex_count();
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != size || !(mask >> anchor & 1U)) continue;
    std::vector<Vertex> vs;
    for (std::size_t v = 0; v < n; ++v) {
      if (mask >> v & 1U) vs.push_back(static_cast<Vertex>(v));
    }
    if (connected(g, vs)) ++count;
  }
  return count;
}

/// Spanning trees counted as acyclic (|V|−1)-edge subsets.
inline std::uint64_t spanning_trees(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  if (n == 1) return 1;
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) != n - 1) continue;
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    bool acyclic = true;
    for (std::size_t i = 0; i < m && acyclic; ++i) {
      if (!(mask >> i & 1U)) continue;
      const std::size_t a = find(g.edges()[i].u);
      const std::size_t b = find(g.edges()[i].v);
      if (a == b) acyclic = false;
      parent[a] = b;
    }
    if (acyclic) ++count;
  }
  return count;
}

/// Law of C(H, 2) for H ~ Hypergeometric(n, k, k), indexed by C(h, 2).
inline std::vector<Rational> clique_intersection_law(std::size_t n, std::size_t k) {
  std::vector<Rational> law(k * (k - 1) / 2 + 1, Rational(0));
  const BigInt total = planted::binomial(n, k);
  for (std::size_t h = 0; h <= k; ++h) {
    if (k - h > n - k) continue;
    const std::size_t pairs = h < 2 ? 0 : h * (h - 1) / 2;
    law[pairs] +=
        Rational(planted::binomial(k, h) * planted::binomial(n - k, k - h), total);
  }
  return law;
}

/// E[(1+λ²)^{|e(Γ ∩ Γ′)|}] with Γ′ = gamma on [0,k) and Γ uniform over
/// every copy in K_n, by listing all copies.
inline Rational intersection_mgf(const Graph& gamma, std::size_t n, const Rational& lambda_sq) {
  const auto all = copies_in_complete(gamma, n);
  Rational sum = 0;
  for (const auto& copy : all) {
    std::size_t shared = 0;
    for (const Edge& e : copy) shared += gamma.has_edge(e.u, e.v) ? 1 : 0;
    sum += planted::pow(1 + lambda_sq, shared);
  }
  return sum / Rational(BigInt(all.size()));
}

}  // namespace oracle
