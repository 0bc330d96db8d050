#include "planted/moments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "planted/copies.hpp"
#include "planted/error.hpp"
#include "planted/isomorphism.hpp"
#include "planted/parallel.hpp"
#include "planted/sampler.hpp"

namespace planted {

namespace {

void validate(const MomentParams& mp) {
  if (mp.lambda_sq < 0) fail(ErrorCode::InvalidArgument, "lambda_sq must be nonnegative");
  if (mp.pattern.empty() || !mp.pattern.is_pattern()) {
    fail(ErrorCode::InvalidArgument, "pattern must have edges and no isolated vertices");
  }
  if (mp.pattern.vertex_count() > mp.n) fail(ErrorCode::PatternTooLarge, "pattern has more vertices than n");
}

std::size_t shared_edges(const Graph& pattern, const std::vector<Edge>& copy) {
  const std::size_t k = pattern.vertex_count();
  std::size_t shared = 0;
  for (const Edge& e : copy) {
    if (e.v < k && pattern.has_edge(e.u, e.v)) ++shared;
  }
  return shared;
}

struct IsoClass {
  Graph representative;
  std::size_t edges = 0;
  std::uint64_t members = 0;
};

// Σ over edge subsets H of the fixed copy with 1 <= |e(H)| <= max_edges of
// λ^{2|e(H)|}·P[H ⊆ Γ], plus 1 for the empty subgraph.
Rational subgraph_sum(const MomentParams& mp, std::size_t max_edges) {
  validate(mp);
  const std::size_t e = mp.pattern.edge_count();
  if (e > 62) fail(ErrorCode::BudgetExceeded, "subgraph enumeration limited to 62 edges");
  const std::size_t top = std::min(max_edges, e);
  BigInt subsets = 0;
  for (std::size_t j = 0; j <= top; ++j) subsets += binomial(e, j);
  if (subsets > kMaxSubsetsEnumerated) {
    fail(ErrorCode::BudgetExceeded, "subgraph enumeration needs " + subsets.str() + " subsets");
  }

  const auto& edges = mp.pattern.edges();
  const std::size_t k = mp.pattern.vertex_count();
  std::map<std::vector<std::size_t>, std::vector<IsoClass>> buckets;
  std::vector<Edge> chosen;
  for (std::size_t j = 1; j <= top; ++j) {
    const std::uint64_t end = std::uint64_t{1} << e;
    for (std::uint64_t mask = (std::uint64_t{1} << j) - 1; mask < end;) {
      chosen.clear();
      for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
        chosen.push_back(edges[static_cast<std::size_t>(std::countr_zero(rest))]);
      }
      Graph h = Graph::from_canonical(k, chosen).without_isolated();
      std::vector<std::size_t> key{h.vertex_count(), h.edge_count()};
      for (std::size_t v = 0; v < h.vertex_count(); ++v) key.push_back(h.degree(static_cast<Vertex>(v)));
      std::sort(key.begin() + 2, key.end());
      auto& bucket = buckets[key];
      auto match = std::find_if(bucket.begin(), bucket.end(),
                                [&](const IsoClass& c) { return are_isomorphic(c.representative, h); });
      if (match == bucket.end()) {
        bucket.push_back({std::move(h), j, 1});
      } else {
        ++match->members;
      }
      // Next subset of the same size (Gosper's hack).
      const std::uint64_t low = mask & (~mask + 1);
      const std::uint64_t ripple = mask + low;
      mask = ripple | (((mask ^ ripple) >> 2) / low);
    }
  }

  Rational total = 1;
  for (const auto& [key, bucket] : buckets) {
    for (const IsoClass& c : bucket) {
      // P[H ⊆ Γ] = N(H, Γ)/|S_H|, and N(H, Γ) is the class size.
      const BigInt copies = copies_in_complete(c.representative, mp.n, static_cast<std::size_t>(-1));
      const BigInt members(c.members);
      total += pow(mp.lambda_sq, c.edges) * Rational(members * members, copies);
    }
  }
  return total;
}

MomentResult exact_result(Rational value, MomentMethod method) {
  MomentResult r;
  r.value = to_double(value);
  r.exact = std::move(value);
  r.method = method;
  return r;
}

}  // namespace

std::string_view to_string(MomentMethod method) noexcept {
  switch (method) {
    case MomentMethod::ExactSubgraphSum:
      return "exact_subgraph_sum";
    case MomentMethod::ExactIntersectionMgf:
      return "exact_intersection_mgf";
    case MomentMethod::MonteCarlo:
      return "monte_carlo";
  }
  return "unknown";
}

double chi_square_bernoulli(double p, double q) {
  if (!(q > 0.0 && q < 1.0)) fail(ErrorCode::DegenerateQ, "q must lie strictly between 0 and 1");
  if (!(p >= 0.0 && p <= 1.0)) fail(ErrorCode::InvalidArgument, "p must lie in [0, 1]");
  return (p - q) * (p - q) / (q * (1.0 - q));
}

Rational chi_square_bernoulli(const Rational& p, const Rational& q) {
  if (!(q > 0 && q < 1)) fail(ErrorCode::DegenerateQ, "q must lie strictly between 0 and 1");
  if (!(p >= 0 && p <= 1)) fail(ErrorCode::InvalidArgument, "p must lie in [0, 1]");
  return (p - q) * (p - q) / (q * (1 - q));
}

IntersectionHistogram intersection_distribution(const Graph& pattern, std::size_t n, std::uint64_t trials,
                                                Rng& rng, unsigned threads) {
  if (pattern.vertex_count() > n) fail(ErrorCode::PatternTooLarge, "pattern has more vertices than n");
  const std::uint64_t base = rng();
  std::vector<std::uint32_t> shared(trials);
  parallel_for(trials, threads, [&](std::size_t i) {
    Rng local = stream(base, i);
    shared[i] = static_cast<std::uint32_t>(shared_edges(pattern, sample_uniform_copy(pattern, n, local).edges));
  });
  IntersectionHistogram h;
  h.counts.assign(pattern.edge_count() + 1, 0);
  h.trials = trials;
  for (auto a : shared) ++h.counts[a];
  return h;
}

std::vector<BigInt> intersection_counts_exact(const Graph& pattern, std::size_t n) {
  if (pattern.vertex_count() > n) fail(ErrorCode::PatternTooLarge, "pattern has more vertices than n");
  const CopyTemplates templates(pattern, kMaxCopyPairsEnumerated);
  if (binomial(n, templates.positions()) * templates.size() > kMaxCopyPairsEnumerated) {
    fail(ErrorCode::BudgetExceeded, "too many copies to enumerate");
  }
  const std::size_t k = pattern.vertex_count();
  std::vector<std::uint64_t> counts(pattern.edge_count() + 1, 0);
  for_each_subset(
      n, k, [&](Vertex u, Vertex v) { return v < k && pattern.has_edge(u, v); },
      [&](std::span<const Vertex>, const PairMask& mask) {
        for (const PairMask& t : templates.masks()) ++counts[mask.overlap(t)];
        return true;
      });
  return {counts.begin(), counts.end()};
}

MomentResult second_moment_exact(const MomentParams& mp) {
  if (mp.pattern.edge_count() > kMaxSubgraphSumEdges) {
    fail(ErrorCode::BudgetExceeded, "exact second moment limited to " +
                                        std::to_string(kMaxSubgraphSumEdges) + " pattern edges");
  }
  return exact_result(subgraph_sum(mp, mp.pattern.edge_count()), MomentMethod::ExactSubgraphSum);
}

MomentResult exact_intersection_mgf(const MomentParams& mp) {
  validate(mp);
  const auto counts = intersection_counts_exact(mp.pattern, mp.n);
  const Rational base = 1 + mp.lambda_sq;
  Rational sum = 0;
  BigInt copies = 0;
  for (std::size_t a = 0; a < counts.size(); ++a) {
    sum += Rational(counts[a]) * pow(base, a);
    copies += counts[a];
  }
  return exact_result(sum / Rational(copies), MomentMethod::ExactIntersectionMgf);
}

MomentResult second_moment_mc(const MomentParams& mp, std::uint64_t trials, Rng& rng, unsigned threads) {
  validate(mp);
  if (trials < 2) fail(ErrorCode::InvalidArgument, "Monte-Carlo second moment needs at least 2 trials");
  const IntersectionHistogram h = intersection_distribution(mp.pattern, mp.n, trials, rng, threads);
  const double base = 1.0 + to_double(mp.lambda_sq);
  double mean = 0.0;
  for (std::size_t a = 0; a < h.counts.size(); ++a) {
    mean += static_cast<double>(h.counts[a]) * std::pow(base, static_cast<double>(a));
  }
  mean /= static_cast<double>(trials);
  double square_dev = 0.0;
  for (std::size_t a = 0; a < h.counts.size(); ++a) {
    const double d = std::pow(base, static_cast<double>(a)) - mean;
    square_dev += static_cast<double>(h.counts[a]) * d * d;
  }
  const double variance = square_dev / static_cast<double>(trials - 1);
  MomentResult r;
  r.value = mean;
  r.method = MomentMethod::MonteCarlo;
  r.std_error = std::sqrt(variance / static_cast<double>(trials));
  return r;
}

MomentResult ldp_norm_sq(const MomentParams& mp, const LdpConfig& cfg) {
  return exact_result(subgraph_sum(mp, cfg.degree), MomentMethod::ExactSubgraphSum);
}

RiskLowerBounds risk_lower_bounds(double second_moment, double p, double q, std::size_t num_planted_edges) {
  if (!(second_moment >= 1.0) || !std::isfinite(second_moment)) {
    fail(ErrorCode::InvalidMoment, "second moment must be finite and at least 1");
  }
  RiskLowerBounds b;
  b.sm_bound = std::max(1.0 - 0.5 * std::sqrt(second_moment - 1.0), 1.0 / (2.0 * second_moment));
  b.tv_edge_bound = std::max(0.0, 1.0 - std::abs(p - q) * static_cast<double>(num_planted_edges));
  return b;
}

}  // namespace planted
