#include "planted/risk.hpp"

#include <cmath>
#include <memory>
#include <string>

#include <boost/math/distributions/normal.hpp>

#include "planted/copies.hpp"
#include "planted/error.hpp"
#include "planted/parallel.hpp"

namespace planted {

DetectorKind parse_detector(std::string_view name) {
  if (name == "count") return DetectorKind::Count;
  if (name == "degree") return DetectorKind::Degree;
  if (name == "scan") return DetectorKind::Scan;
  if (name == "scan_full") return DetectorKind::ScanFull;
  if (name == "lrt") return DetectorKind::Likelihood;
  fail(ErrorCode::InvalidArgument, "unknown detector '" + std::string(name) + "'");
}

std::string_view to_string(DetectorKind kind) noexcept {
  switch (kind) {
    case DetectorKind::Count:
      return "count";
    case DetectorKind::Degree:
      return "degree";
    case DetectorKind::Scan:
      return "scan";
    case DetectorKind::ScanFull:
      return "scan_full";
    case DetectorKind::Likelihood:
      return "lrt";
  }
  return "unknown";
}

Detector make_detector(DetectorKind kind, const ModelParams& params, const DetectorConfig& cfg) {
  validate(params);
  validate(cfg);
  switch (kind) {
    case DetectorKind::Count: {
      const double threshold = count_threshold(params);
      return [threshold](const Observation& obs, Rng&) { return static_cast<double>(obs.edge_count()) >= threshold; };
    }
    case DetectorKind::Degree: {
      const double threshold = degree_threshold(params, cfg);
      return [threshold](const Observation& obs, Rng&) { return static_cast<double>(obs.max_degree()) >= threshold; };
    }
    case DetectorKind::Scan:
    case DetectorKind::ScanFull: {
      DetectorConfig local = cfg;
      local.scan_full_pattern = kind == DetectorKind::ScanFull;
      auto scan = std::make_shared<const ScanDetector>(params, local);
      return [scan](const Observation& obs, Rng&) { return (*scan)(obs).decision; };
    }
    case DetectorKind::Likelihood: {
      auto lrt = std::make_shared<const LikelihoodRatioDetector>(params);
      return [lrt](const Observation& obs, Rng&) { return (*lrt)(obs).decision; };
    }
  }
  fail(ErrorCode::InvalidArgument, "unknown detector kind");
}

double wilson_halfwidth(std::uint64_t hits, std::uint64_t trials, double level) {
  if (trials == 0) fail(ErrorCode::InvalidArgument, "Wilson interval needs at least one trial");
  const boost::math::normal standard;
  const double z = boost::math::quantile(standard, 0.5 + level / 2.0);
  const double t = static_cast<double>(trials);
  const double phat = static_cast<double>(hits) / t;
  return z / (1.0 + z * z / t) * std::sqrt(phat * (1.0 - phat) / t + z * z / (4.0 * t * t));
}

RiskEstimate estimate_risk(const Detector& detector, const ModelParams& params, std::uint64_t trials,
                           std::uint64_t seed, unsigned threads) {
  validate(params);
  if (trials == 0) fail(ErrorCode::InvalidArgument, "trials must be >= 1");
  std::vector<char> rejected(2 * trials, 0);
  parallel_for(2 * trials, threads, [&](std::size_t job) {
    const std::uint64_t hypothesis = job / trials;
    const std::uint64_t index = job % trials;
    Rng sampling = stream(seed, index, hypothesis);
    Rng coins = stream(seed, index, 2 + hypothesis);
    if (hypothesis == 0) {
      rejected[job] = detector(sample_null(params.n, params.q, sampling), coins);
    } else {
      rejected[job] = detector(sample_planted(params, sampling).observation, coins);
    }
  });
  std::uint64_t false_alarms = 0;
  std::uint64_t misses = 0;
  for (std::uint64_t i = 0; i < trials; ++i) {
    false_alarms += rejected[i] ? 1 : 0;
    misses += rejected[trials + i] ? 0 : 1;
  }
  RiskEstimate r;
  r.trials_per_hypothesis = trials;
  r.type1 = static_cast<double>(false_alarms) / static_cast<double>(trials);
  r.type2 = static_cast<double>(misses) / static_cast<double>(trials);
  r.risk = r.type1 + r.type2;
  r.ci_halfwidth = wilson_halfwidth(false_alarms, trials) + wilson_halfwidth(misses, trials);
  return r;
}

ExactRiskTable::ExactRiskTable(const ModelParams& params) : n_(params.n) {
  validate(params);
  const std::size_t pairs = n_ * (n_ - 1) / 2;
  if (pairs > kExactRiskMaxPairs) {
    fail(ErrorCode::BudgetExceeded, "exact risk limited to " + std::to_string(kExactRiskMaxPairs) + " vertex pairs");
  }
  // Every copy of Γ in K_n as a bit set over the pairs of [0, n).
  const CopyTemplates templates(params.pattern, std::size_t{1} << 20);
  std::vector<std::uint32_t> copies;
  for_each_subset(
      n_, templates.positions(), [](Vertex, Vertex) { return false; },
      [&](std::span<const Vertex> subset, const PairMask&) {
        for (const PairMask& t : templates.masks()) {
          std::uint32_t bits = 0;
          for (std::size_t j = 1; j < subset.size(); ++j) {
            for (std::size_t i = 0; i < j; ++i) {
              if (t.test(pair_index(i, j))) bits |= std::uint32_t{1} << pair_index(subset[i], subset[j]);
            }
          }
          copies.push_back(bits);
        }
        return true;
      });

  const std::size_t count = std::size_t{1} << pairs;
  null_.resize(count);
  planted_.resize(count);
  const double p = params.p;
  const double q = params.q;
  for (std::size_t g = 0; g < count; ++g) {
    double p0 = 1.0;
    for (std::size_t b = 0; b < pairs; ++b) p0 *= (g >> b & 1U) ? q : 1.0 - q;
    null_[g] = p0;
    double p1 = 0.0;
    for (std::uint32_t copy : copies) {
      double term = 1.0;
      for (std::size_t b = 0; b < pairs; ++b) {
        const bool present = g >> b & 1U;
        const double rate = (copy >> b & 1U) ? p : q;
        term *= present ? rate : 1.0 - rate;
      }
      p1 += term;
    }
    planted_[g] = p1 / static_cast<double>(copies.size());
  }
}

Observation ExactRiskTable::observation(std::size_t index) const {
  Observation obs(n_);
  for (std::size_t j = 1; j < n_; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (index >> pair_index(i, j) & 1U) obs.set_edge(static_cast<Vertex>(i), static_cast<Vertex>(j), true);
    }
  }
  return obs;
}

double ExactRiskTable::total_variation() const {
  double sum = 0.0;
  for (std::size_t g = 0; g < null_.size(); ++g) sum += std::abs(null_[g] - planted_[g]);
  return sum / 2.0;
}

ExactRiskTable::Risk ExactRiskTable::risk(const std::function<bool(const Observation&)>& test) const {
  Risk r;
  for (std::size_t g = 0; g < null_.size(); ++g) {
    if (test(observation(g))) {
      r.type1 += null_[g];
    } else {
      r.type2 += planted_[g];
    }
  }
  r.risk = r.type1 + r.type2;
  return r;
}

}  // namespace planted
