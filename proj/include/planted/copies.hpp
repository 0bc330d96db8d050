#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "planted/graph.hpp"

namespace planted {

/// Largest pattern vertex count handled by the K_n copy enumerators.
inline constexpr std::size_t kMaxCopyPositions = 22;

/// Index of the pair {i, j}, i < j, among the pairs of positions [0, k).
constexpr std::size_t pair_index(std::size_t i, std::size_t j) noexcept { return j * (j - 1) / 2 + i; }

/// Bit set over the pairs of up to kMaxCopyPositions positions.
struct PairMask {
  std::array<std::uint64_t, 4> words{};

  void set(std::size_t bit) noexcept { words[bit >> 6] |= std::uint64_t{1} << (bit & 63); }
  bool test(std::size_t bit) const noexcept { return words[bit >> 6] >> (bit & 63) & 1U; }
  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  std::size_t overlap(const PairMask& other) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words.size(); ++i) {
      c += static_cast<std::size_t>(std::popcount(words[i] & other.words[i]));
    }
    return c;
  }
  friend bool operator==(const PairMask&, const PairMask&) = default;
  friend auto operator<=>(const PairMask&, const PairMask&) = default;
};

/// The distinct edge sets of a pattern placed on positions [0, k), where
/// k = |v(pattern)|: there are k!/|Aut(pattern)| of them. A copy of the
/// pattern in K_n is a k-subset of [0, n) plus one of these templates,
/// with position i standing for the i-th smallest vertex of the subset.
class CopyTemplates {
 public:
  /// Throws PatternTooLarge above kMaxCopyPositions vertices and
  /// BudgetExceeded when more than `max_templates` templates exist.
  CopyTemplates(const Graph& pattern, std::size_t max_templates);

  std::size_t positions() const noexcept { return positions_; }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t size() const noexcept { return masks_.size(); }
  const std::vector<PairMask>& masks() const noexcept { return masks_; }

 private:
  std::size_t positions_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<PairMask> masks_;
};

/// Visits every k-subset of [0, n) in lexicographic order together with
/// the pair mask of `has_edge` restricted to the subset. `visit(subset,
/// mask)` returns false to stop the enumeration.
template <class HasEdge, class Visit>
void for_each_subset(std::size_t n, std::size_t k, HasEdge&& has_edge, Visit&& visit) {
  if (k > n || k > kMaxCopyPositions) return;
  std::vector<Vertex> subset(k);
  std::vector<PairMask> prefix(k + 1);
  // Depth-first walk; prefix[j] holds the pairs among subset[0..j).
  auto descend = [&](auto& self, std::size_t depth, std::size_t start) -> bool {
    if (depth == k) return visit(std::span<const Vertex>(subset), prefix[k]);
    for (std::size_t v = start; v + (k - depth) <= n; ++v) {
      subset[depth] = static_cast<Vertex>(v);
      PairMask mask = prefix[depth];
      for (std::size_t i = 0; i < depth; ++i) {
        if (has_edge(subset[i], subset[depth])) mask.set(pair_index(i, depth));
      }
      prefix[depth + 1] = mask;
      if (!self(self, depth + 1, v + 1)) return false;
    }
    return true;
  };
  descend(descend, 0, 0);
}

}  // namespace planted
