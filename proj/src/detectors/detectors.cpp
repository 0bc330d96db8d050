#include "planted/detectors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "planted/density.hpp"
#include "planted/error.hpp"
#include "planted/numeric.hpp"

namespace planted {

namespace {

Verdict decide(double statistic, double threshold) { return {statistic >= threshold, statistic, threshold}; }

double pair_count(std::size_t n) { return static_cast<double>(n) * static_cast<double>(n - 1) / 2.0; }

std::uint64_t copy_total(std::size_t n, const CopyTemplates& templates, std::uint64_t cap) {
  const BigInt total = binomial(n, templates.positions()) * templates.size();
  return total > cap ? cap + 1 : static_cast<std::uint64_t>(total);
}

Graph scan_pattern(const ModelParams& params, const DetectorConfig& cfg) {
  validate(params);
  validate(cfg);
  return cfg.scan_full_pattern ? params.pattern : densest_subgraph(params.pattern);
}

const Graph& likelihood_pattern(const ModelParams& params) {
  validate(params);
  if (params.n > kLikelihoodMaxVertices) {
    fail(ErrorCode::BudgetExceeded,
         "likelihood ratio limited to n <= " + std::to_string(kLikelihoodMaxVertices));
  }
  return params.pattern;
}

}  // namespace

void validate(const DetectorConfig& cfg) {
  if (!(cfg.scan_kappa_weight > 0.0 && cfg.scan_kappa_weight < 1.0)) {
    fail(ErrorCode::InvalidArgument, "scan_kappa_weight must lie in (0, 1)");
  }
  if (cfg.scan_copy_budget < 1) fail(ErrorCode::InvalidArgument, "scan_copy_budget must be >= 1");
  if (!std::isfinite(cfg.degree_threshold_constant)) {
    fail(ErrorCode::InvalidArgument, "degree_threshold_constant must be finite");
  }
}

double count_threshold(const ModelParams& params) {
  return pair_count(params.n) * params.q +
         static_cast<double>(params.pattern.edge_count()) * (params.p - params.q) / 2.0;
}

double degree_threshold(const ModelParams& params, const DetectorConfig& cfg) {
  const double n1 = static_cast<double>(params.n - 1);
  const double shift = static_cast<double>(params.pattern.max_degree()) * (params.p - params.q);
  if (cfg.optimized_degree_threshold) {
    const double spread =
        std::sqrt(2.0 * n1 * params.q * (1.0 - params.q) * std::log(static_cast<double>(params.n)));
    return n1 * params.q + (spread + shift) / 2.0;
  }
  return n1 * params.q + cfg.degree_threshold_constant * shift;
}

Verdict count_test(const Observation& obs, const ModelParams& params) {
  validate(params);
  return decide(static_cast<double>(obs.edge_count()), count_threshold(params));
}

Verdict degree_test(const Observation& obs, const ModelParams& params, const DetectorConfig& cfg) {
  validate(params);
  validate(cfg);
  return decide(static_cast<double>(obs.max_degree()), degree_threshold(params, cfg));
}

Verdict scan_test(const Observation& obs, const ModelParams& params, const DetectorConfig& cfg) {
  return ScanDetector(params, cfg)(obs);
}

Verdict likelihood_ratio_test(const Observation& obs, const ModelParams& params) {
  return LikelihoodRatioDetector(params)(obs);
}

ScanDetector::ScanDetector(const ModelParams& params, const DetectorConfig& cfg)
    : n_(params.n),
      scanned_(scan_pattern(params, cfg)),
      templates_(scanned_, cfg.scan_copy_budget) {
  if (copy_total(n_, templates_, cfg.scan_copy_budget) > cfg.scan_copy_budget) {
    fail(ErrorCode::ScanBudgetExceeded,
         "scan needs more than " + std::to_string(cfg.scan_copy_budget) + " copies");
  }
  const double kappa = cfg.scan_kappa_weight * params.q + (1.0 - cfg.scan_kappa_weight) * params.p;
  threshold_ = kappa * static_cast<double>(scanned_.edge_count());
}

std::size_t ScanDetector::statistic(const Observation& obs) const {
  if (obs.vertex_count() != n_) fail(ErrorCode::InvalidArgument, "observation size does not match n");
  const std::size_t ceiling = templates_.edge_count();
  std::size_t best = 0;
  for_each_subset(
      n_, templates_.positions(), [&](Vertex u, Vertex v) { return obs.has_edge(u, v); },
      [&](std::span<const Vertex>, const PairMask& mask) {
        if (mask.count() <= best) return true;
        for (const PairMask& t : templates_.masks()) best = std::max(best, mask.overlap(t));
        return best < ceiling;
      });
  return best;
}

Verdict ScanDetector::operator()(const Observation& obs) const {
  return decide(static_cast<double>(statistic(obs)), threshold_);
}

LikelihoodRatioDetector::LikelihoodRatioDetector(const ModelParams& params)
    : n_(params.n),
      templates_(likelihood_pattern(params), kLikelihoodMaxCopies) {
  const std::uint64_t total = copy_total(n_, templates_, kLikelihoodMaxCopies);
  if (total > kLikelihoodMaxCopies) {
    fail(ErrorCode::BudgetExceeded, "likelihood ratio needs more than " +
                                        std::to_string(kLikelihoodMaxCopies) + " copies");
  }
  copies_ = static_cast<double>(total);
  const std::size_t e = templates_.edge_count();
  const double present = params.p / params.q;
  const double absent = (1.0 - params.p) / (1.0 - params.q);
  weight_.resize(e + 1);
  for (std::size_t a = 0; a <= e; ++a) {
    weight_[a] = std::pow(present, static_cast<double>(a)) * std::pow(absent, static_cast<double>(e - a));
  }
}

double LikelihoodRatioDetector::likelihood(const Observation& obs) const {
  if (obs.vertex_count() != n_) fail(ErrorCode::InvalidArgument, "observation size does not match n");
  std::vector<std::uint64_t> histogram(weight_.size(), 0);
  for_each_subset(
      n_, templates_.positions(), [&](Vertex u, Vertex v) { return obs.has_edge(u, v); },
      [&](std::span<const Vertex>, const PairMask& mask) {
        for (const PairMask& t : templates_.masks()) ++histogram[mask.overlap(t)];
        return true;
      });
  double sum = 0.0;
  for (std::size_t a = 0; a < histogram.size(); ++a) sum += static_cast<double>(histogram[a]) * weight_[a];
  return sum / copies_;
}

Verdict LikelihoodRatioDetector::operator()(const Observation& obs) const {
  return decide(likelihood(obs), 1.0);
}

}  // namespace planted
