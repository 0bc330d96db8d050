#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "planted/graph.hpp"

namespace planted {

enum class FamilyKind {
  Clique,             // K_k on 0..k-1
  Path,               // k edges on 0-1-...-k
  Star,               // centre 0, leaves 1..d
  CompleteBipartite,  // K_{a,b}, left side 0..a-1
  RegularTree,        // root 0, BFS numbering; all internal degrees D
  Matching,           // edges (2i, 2i+1)
  DisjointTriangles,  // triangles on 3i..3i+2
  UnbalancedStars,    // k stars of degree ⌊k^{1/4}⌋, then one of degree ⌊k^{3/4}⌋
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::Clique;
  std::size_t first = 0;   // k, d, a, D, m or t
  std::size_t second = 0;  // b for complete_bipartite, depth for regular_tree
};

/// Parses "clique:4", "complete_bipartite:2,3", "regular_tree:3,2",
/// "unbalanced_stars:16", ... Throws InvalidSpec.
FamilySpec parse_family(std::string_view text);
std::string to_string(const FamilySpec& spec);

/// Builds the family member. Throws InvalidSpec for zero or oversized
/// parameters, and for clique:1 (a lone vertex is not a pattern).
Graph make_family(const FamilySpec& spec);

/// floor(x^(1/r)) computed exactly.
std::uint64_t integer_root(std::uint64_t x, unsigned r);

struct UnbalancedStarsShape {
  std::uint64_t stars = 0;          // k
  std::uint64_t small_degree = 0;   // ⌊k^{1/4}⌋
  std::uint64_t large_degree = 0;   // ⌊k^{3/4}⌋
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  std::uint64_t max_degree = 0;
  std::uint64_t vertex_cover = 0;   // one centre per star
};

/// Invariants of unbalanced_stars(k) in closed form, without building it.
UnbalancedStarsShape unbalanced_stars_shape(std::uint64_t k);

}  // namespace planted
