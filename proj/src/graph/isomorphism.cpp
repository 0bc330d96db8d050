#include "planted/isomorphism.hpp"

#include <algorithm>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "planted/error.hpp"

namespace planted {

namespace {

using Pin = std::pair<Vertex, Vertex>;

// Backtracking search for edge-preserving injections h -> g. In `exact`
// mode non-edges must map to non-edges and degrees must match, which is
// what isomorphism and automorphism searches need.
class Embedder {
 public:
  Embedder(const Graph& h, const Graph& g, bool exact, std::uint64_t budget)
      : h_(h), g_(g), exact_(exact), budget_(budget) {}

  // Calls visit() once per complete embedding extending `pins`. visit
  // returns false to stop early; run() then returns false.
  template <class Visit>
  bool run(std::span<const Pin> pins, Visit&& visit) {
    const std::size_t k = h_.vertex_count();
    order_ = search_order(h_, pins);
    image_.assign(k, kUnset);
    used_.assign(g_.vertex_count(), 0);
    for (const Pin& pin : pins) {
      if (used_[pin.second]) return true;
      image_[pin.first] = pin.second;
      used_[pin.second] = 1;
    }
    for (std::size_t i = 0; i < pins.size(); ++i) {
      if (!consistent(order_[i], image_[order_[i]], i)) return true;
    }
    return extend(pins.size(), visit);
  }

  static std::vector<Vertex> search_order(const Graph& h, std::span<const Pin> pins) {
    const std::size_t k = h.vertex_count();
    std::vector<Vertex> order;
    std::vector<char> placed(k, 0);
    std::vector<std::size_t> links(k, 0);
    auto place = [&](Vertex v) {
      order.push_back(v);
      placed[v] = 1;
      for (Vertex w : h.neighbors(v)) ++links[w];
    };
    for (const Pin& pin : pins) place(pin.first);
    while (order.size() < k) {
      Vertex pick = 0;
      bool found = false;
      for (std::size_t v = 0; v < k; ++v) {
        if (placed[v]) continue;
        const auto cand = static_cast<Vertex>(v);
        if (!found || links[v] > links[pick] ||
            (links[v] == links[pick] && h.degree(cand) > h.degree(pick))) {
          pick = cand;
          found = true;
        }
      }
      place(pick);
    }
    return order;
  }

 private:
  static constexpr Vertex kUnset = std::numeric_limits<Vertex>::max();

  // Checks the pair relations between `x` (mapped to `y`) and the first
  // `depth` vertices of the order.
  bool consistent(Vertex x, Vertex y, std::size_t depth) const {
    const std::size_t dh = h_.degree(x);
    const std::size_t dg = g_.degree(y);
    if (exact_ ? dh != dg : dh > dg) return false;
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex u = order_[i];
      const bool in_h = h_.has_edge(x, u);
      if (in_h || exact_) {
        if (g_.has_edge(y, image_[u]) != in_h) return false;
      }
    }
    return true;
  }

  template <class Visit>
  bool extend(std::size_t depth, Visit& visit) {
    if (depth == order_.size()) return visit();
    const Vertex x = order_[depth];
    Vertex anchor = kUnset;
    for (Vertex w : h_.neighbors(x)) {
      if (image_[w] != kUnset) {
        anchor = image_[w];
        break;
      }
    }
    auto attempt = [&](Vertex y) {
      if (used_[y] || !consistent(x, y, depth)) return true;
      if (++nodes_ > budget_) {
        fail(ErrorCode::BudgetExceeded,
             "embedding search exceeded " + std::to_string(budget_) + " partial assignments");
      }
      image_[x] = y;
      used_[y] = 1;
      const bool go_on = extend(depth + 1, visit);
      used_[y] = 0;
      image_[x] = kUnset;
      return go_on;
    };
    if (anchor != kUnset) {
      for (Vertex y : g_.neighbors(anchor)) {
        if (!attempt(y)) return false;
      }
    } else {
      for (std::size_t y = 0; y < g_.vertex_count(); ++y) {
        if (!attempt(static_cast<Vertex>(y))) return false;
      }
    }
    return true;
  }

  const Graph& h_;
  const Graph& g_;
  bool exact_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Vertex> order_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
};

bool has_extension(const Graph& g, std::span<const Pin> pins, std::uint64_t budget) {
  Embedder search(g, g, true, budget);
  bool found = false;
  search.run(pins, [&] {
    found = true;
    return false;
  });
  return found;
}

BigInt automorphisms_unbounded(const Graph& g, std::uint64_t budget) {
  const std::size_t n = g.vertex_count();
  const std::vector<Vertex> chain = Embedder::search_order(g, {});
  BigInt total = 1;
  std::vector<Pin> pins;
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex x = chain[i];
    std::uint64_t orbit = 0;
    for (std::size_t y = 0; y < n; ++y) {
      const auto target = static_cast<Vertex>(y);
      if (g.degree(target) != g.degree(x)) continue;
      bool pinned = false;
      for (const Pin& pin : pins) pinned = pinned || pin.second == target;
      if (pinned) continue;
      if (target == x) {
        ++orbit;
        continue;
      }
      pins.emplace_back(x, target);
      if (has_extension(g, pins, budget)) ++orbit;
      pins.pop_back();
    }
    total *= orbit;
    pins.emplace_back(x, x);
  }
  return total;
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> seq;
  seq.reserve(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) seq.push_back(g.degree(static_cast<Vertex>(v)));
  std::sort(seq.begin(), seq.end());
  return seq;
}

}  // namespace

BigInt automorphism_count(const Graph& g, std::size_t max_vertices) {
  if (g.vertex_count() > max_vertices) {
    fail(ErrorCode::BudgetExceeded, "automorphism count limited to " + std::to_string(max_vertices) +
                                        " vertices, graph has " + std::to_string(g.vertex_count()));
  }
  return automorphisms_unbounded(g, kDefaultEmbeddingBudget);
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  Embedder search(a, b, true, kDefaultEmbeddingBudget);
  bool found = false;
  search.run({}, [&] {
    found = true;
    return false;
  });
  return found;
}

BigInt count_embeddings(const Graph& h, const Graph& g, std::uint64_t budget) {
  if (h.vertex_count() > g.vertex_count()) return 0;
  std::uint64_t count = 0;
  Embedder search(h, g, false, budget);
  search.run({}, [&] {
    ++count;
    return true;
  });
  return BigInt(count);
}

BigInt count_copies(const Graph& h, const Graph& g, std::uint64_t budget) {
  if (!h.is_pattern() || h.empty()) {
    fail(ErrorCode::InvalidArgument, "count_copies needs a pattern graph without isolated vertices");
  }
  if (h.vertex_count() > g.vertex_count()) return 0;
  const BigInt embeddings = count_embeddings(h, g, budget);
  if (embeddings == 0) return 0;
  return embeddings / automorphisms_unbounded(h, budget);
}

BigInt copies_in_complete(const Graph& h, std::size_t n, std::size_t automorphism_budget) {
  if (h.vertex_count() > n) {
    fail(ErrorCode::PatternTooLarge, "pattern has " + std::to_string(h.vertex_count()) +
                                         " vertices, host has " + std::to_string(n));
  }
  return falling_factorial(n, h.vertex_count()) / automorphism_count(h, automorphism_budget);
}

Rational containment_probability(const Graph& h, const Graph& gamma, std::size_t n,
                                 std::uint64_t budget) {
  if (gamma.vertex_count() > n) {
    fail(ErrorCode::PatternTooLarge, "fixed copy has " + std::to_string(gamma.vertex_count()) +
                                         " vertices, host has " + std::to_string(n));
  }
  const BigInt inside = count_copies(h, gamma, budget);
  const BigInt total = falling_factorial(n, h.vertex_count()) / automorphisms_unbounded(h, budget);
  return Rational(inside, total);
}

}  // namespace planted
