#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "planted/graph.hpp"
#include "planted/numeric.hpp"
#include "planted/rng.hpp"

namespace planted {

/// λ² = χ²(p‖q) and the planted pattern Γ in K_n.
struct MomentParams {
  std::size_t n = 0;
  Rational lambda_sq;
  Graph pattern;
};

struct LdpConfig {
  std::size_t degree = 0;
};

enum class MomentMethod { ExactSubgraphSum, ExactIntersectionMgf, MonteCarlo };

std::string_view to_string(MomentMethod method) noexcept;

struct MomentResult {
  double value = 1.0;
  std::optional<Rational> exact;     // set by the exact methods
  MomentMethod method = MomentMethod::ExactSubgraphSum;
  std::optional<double> std_error;   // set by Monte-Carlo
};

inline constexpr std::size_t kMaxSubgraphSumEdges = 20;
inline constexpr std::uint64_t kMaxSubsetsEnumerated = std::uint64_t{1} << 22;
inline constexpr std::uint64_t kMaxCopyPairsEnumerated = 20'000'000;

/// (p−q)²/(q(1−q)). Throws DegenerateQ when q is 0 or 1.
double chi_square_bernoulli(double p, double q);
Rational chi_square_bernoulli(const Rational& p, const Rational& q);

/// Histogram of |e(Γ ∩ Γ′)| for a fixed canonical copy Γ′ (pattern on
/// vertices 0..k−1) and uniform random copies Γ.
struct IntersectionHistogram {
  std::vector<std::uint64_t> counts;  // counts[a]: trials with a shared edges
  std::uint64_t trials = 0;
};

/// Trial i draws from stream(base, i) where base is taken from `rng`, so the
/// histogram does not depend on `threads`.
IntersectionHistogram intersection_distribution(const Graph& pattern, std::size_t n, std::uint64_t trials,
                                                Rng& rng, unsigned threads = 1);

/// Exact number of copies Γ in K_n with each intersection size against the
/// canonical copy, by enumerating all copies.
std::vector<BigInt> intersection_counts_exact(const Graph& pattern, std::size_t n);

/// E[L²] = Σ over subgraphs H of Γ′ of λ^{2|e(H)|} P[H ⊆ Γ]. Edge subsets
/// of Γ′ are grouped into isomorphism classes. Needs |e(Γ)| <= 20.
MomentResult second_moment_exact(const MomentParams& mp);

/// E[(1+λ²)^{|e(Γ∩Γ′)|}] from intersection_counts_exact.
MomentResult exact_intersection_mgf(const MomentParams& mp);

/// Sample mean of (1+λ²)^{|e(Γ∩Γ′)|} with its standard error.
MomentResult second_moment_mc(const MomentParams& mp, std::uint64_t trials, Rng& rng, unsigned threads = 1);

/// ‖L_{≤D}‖²: the subgraph sum restricted to |e(H)| <= D.
MomentResult ldp_norm_sq(const MomentParams& mp, const LdpConfig& cfg);

struct RiskLowerBounds {
  double sm_bound = 0.0;       // max(1 − ½√(E[L²]−1), 1/(2E[L²]))
  double tv_edge_bound = 0.0;  // max(0, 1 − |p−q|·|e(Γ)|)
};

/// Throws InvalidMoment unless second_moment >= 1.
RiskLowerBounds risk_lower_bounds(double second_moment, double p, double q, std::size_t num_planted_edges);

}  // namespace planted
