#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "planted/copies.hpp"
#include "planted/graph.hpp"
#include "planted/observation.hpp"
#include "planted/sampler.hpp"

namespace planted {

struct DetectorConfig {
  /// ε in κ = ε·q + (1−ε)·p; must lie in (0, 1).
  double scan_kappa_weight = 0.5;
  /// Largest number of copies the scan may enumerate.
  std::uint64_t scan_copy_budget = 50'000'000;
  /// c in τ_deg = (n−1)q + c·d_max(Γ)(p−q).
  double degree_threshold_constant = 0.5;
  /// Replace τ_deg by (n−1)q + (sqrt(2(n−1)q(1−q) ln n) + d_max(Γ)(p−q))/2.
  bool optimized_degree_threshold = false;
  /// Scan over copies of Γ itself instead of its densest subgraph.
  bool scan_full_pattern = false;
};

/// Throws InvalidArgument for out-of-range fields.
void validate(const DetectorConfig& cfg);

/// decision == (statistic >= threshold); ties reject H0.
struct Verdict {
  bool decision = false;
  double statistic = 0.0;
  double threshold = 0.0;
};

inline constexpr std::size_t kLikelihoodMaxVertices = 10;
inline constexpr std::uint64_t kLikelihoodMaxCopies = 1'000'000;

double count_threshold(const ModelParams& params);
double degree_threshold(const ModelParams& params, const DetectorConfig& cfg = {});

/// Total number of observed edges.
Verdict count_test(const Observation& obs, const ModelParams& params);
/// Largest observed degree.
Verdict degree_test(const Observation& obs, const ModelParams& params, const DetectorConfig& cfg = {});
/// See ScanDetector.
Verdict scan_test(const Observation& obs, const ModelParams& params, const DetectorConfig& cfg = {});
/// See LikelihoodRatioDetector.
Verdict likelihood_ratio_test(const Observation& obs, const ModelParams& params);

/// Scan statistic: the most observed edges inside any copy of the scanned
/// pattern (Γ_max by default) in K_n, thresholded at κ·|e(pattern)|.
/// Construction does all per-instance work so the detector can be reused
/// across observations. Throws ScanBudgetExceeded when the copies of the
/// scanned pattern exceed cfg.scan_copy_budget.
class ScanDetector {
 public:
  ScanDetector(const ModelParams& params, const DetectorConfig& cfg = {});

  const Graph& scanned_pattern() const noexcept { return scanned_; }
  double threshold() const noexcept { return threshold_; }
  std::size_t statistic(const Observation& obs) const;
  Verdict operator()(const Observation& obs) const;

 private:
  std::size_t n_;
  Graph scanned_;
  CopyTemplates templates_;
  double threshold_;
};

/// Exact likelihood ratio L(G) = |S_Γ|⁻¹ Σ over copies of the product of
/// per-pair likelihood ratios on the copy's edges; rejects when L(G) >= 1.
/// Limited to n <= kLikelihoodMaxVertices and |S_Γ| <= kLikelihoodMaxCopies
/// (BudgetExceeded otherwise).
class LikelihoodRatioDetector {
 public:
  explicit LikelihoodRatioDetector(const ModelParams& params);

  double likelihood(const Observation& obs) const;
  Verdict operator()(const Observation& obs) const;

 private:
  std::size_t n_;
  CopyTemplates templates_;
  std::vector<double> weight_;  // weight_[a]: ratio for a present copy edges
  double copies_;
};

}  // namespace planted
