#include "planted/copies.hpp"

#include <set>
#include <string>

#include "planted/error.hpp"

namespace planted {

namespace {

// Pair permutation induced by swapping positions t and t+1.
std::vector<std::size_t> transposition_on_pairs(std::size_t k, std::size_t t) {
  auto swap_pos = [t](std::size_t x) { return x == t ? t + 1 : x == t + 1 ? t : x; };
  std::vector<std::size_t> image(k * (k - 1) / 2);
  for (std::size_t j = 1; j < k; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      std::size_t a = swap_pos(i);
      std::size_t b = swap_pos(j);
      if (a > b) std::swap(a, b);
      image[pair_index(i, j)] = pair_index(a, b);
    }
  }
  return image;
}

}  // namespace

CopyTemplates::CopyTemplates(const Graph& pattern, std::size_t max_templates) {
  const std::size_t k = pattern.vertex_count();
  if (k > kMaxCopyPositions) {
    fail(ErrorCode::PatternTooLarge, "copy enumeration supports at most " +
                                         std::to_string(kMaxCopyPositions) + " pattern vertices");
  }
  positions_ = k;
  edge_count_ = pattern.edge_count();
  PairMask start;
  for (const Edge& e : pattern.edges()) start.set(pair_index(e.u, e.v));

  // The orbit of the pattern's edge set under S_k, explored breadth-first
  // through adjacent transpositions.
  std::vector<std::vector<std::size_t>> generators;
  for (std::size_t t = 0; t + 1 < k; ++t) generators.push_back(transposition_on_pairs(k, t));
  const std::size_t pairs = k * (k - 1) / 2;
  std::set<PairMask> seen{start};
  std::vector<PairMask> frontier{start};
  while (!frontier.empty()) {
    std::vector<PairMask> next;
    for (const PairMask& mask : frontier) {
      for (const auto& gen : generators) {
        PairMask moved;
        for (std::size_t b = 0; b < pairs; ++b) {
          if (mask.test(b)) moved.set(gen[b]);
        }
        if (seen.insert(moved).second) {
          if (seen.size() > max_templates) {
            fail(ErrorCode::BudgetExceeded, "pattern has more than " + std::to_string(max_templates) +
                                                " placements on its own vertex count");
          }
          next.push_back(moved);
        }
      }
    }
    frontier = std::move(next);
  }
  masks_.assign(seen.begin(), seen.end());
}

}  // namespace planted
