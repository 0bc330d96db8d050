#pragma once

#include <cstddef>
#include <cstdint>

#include "planted/graph.hpp"
#include "planted/numeric.hpp"

namespace planted {

inline constexpr std::size_t kDefaultAutomorphismBudget = 10;
inline constexpr std::uint64_t kDefaultEmbeddingBudget = 200'000'000;

/// |Aut(G)|, exact. Counted as a product of orbit sizes along a stabiliser
/// chain; each orbit member is confirmed by a backtracking search with
/// degree pruning. Throws BudgetExceeded when |v(G)| > max_vertices.
BigInt automorphism_count(const Graph& g, std::size_t max_vertices = kDefaultAutomorphismBudget);

bool are_isomorphic(const Graph& a, const Graph& b);

/// Number of injective maps v(H) -> v(G) sending edges to edges.
/// `budget` caps the number of partial assignments explored.
BigInt count_embeddings(const Graph& h, const Graph& g,
                        std::uint64_t budget = kDefaultEmbeddingBudget);

/// N(H, G): distinct subgraphs of G isomorphic to H. H must have no
/// isolated vertices.
BigInt count_copies(const Graph& h, const Graph& g, std::uint64_t budget = kDefaultEmbeddingBudget);

/// |S_H| = C(n, |v(H)|) · |v(H)|! / |Aut(H)|, the copies of H in K_n.
BigInt copies_in_complete(const Graph& h, std::size_t n,
                          std::size_t automorphism_budget = kDefaultAutomorphismBudget);

/// P[H ⊆ Γ′] for a uniform copy H in K_n and a fixed copy Γ′ of `gamma`,
/// i.e. N(H, Γ) / |S_H|.
Rational containment_probability(const Graph& h, const Graph& gamma, std::size_t n,
                                 std::uint64_t budget = kDefaultEmbeddingBudget);

}  // namespace planted
