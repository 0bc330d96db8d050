#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "planted/detectors.hpp"
#include "planted/observation.hpp"
#include "planted/rng.hpp"
#include "planted/sampler.hpp"

namespace planted {

/// A test φ: returns true to reject H0. The generator lets randomised
/// tests draw coins reproducibly.
using Detector = std::function<bool(const Observation&, Rng&)>;

enum class DetectorKind { Count, Degree, Scan, ScanFull, Likelihood };

/// "count", "degree", "scan", "scan_full" or "lrt". Throws InvalidArgument.
DetectorKind parse_detector(std::string_view name);
std::string_view to_string(DetectorKind kind) noexcept;

/// Prepared detector for repeated use; ScanFull scans copies of Γ itself.
Detector make_detector(DetectorKind kind, const ModelParams& params, const DetectorConfig& cfg = {});

/// Wilson score half-width for `hits` successes out of `trials` at the
/// given two-sided confidence level.
double wilson_halfwidth(std::uint64_t hits, std::uint64_t trials, double level = 0.99);

struct RiskEstimate {
  double type1 = 0.0;
  double type2 = 0.0;
  double risk = 0.0;
  std::uint64_t trials_per_hypothesis = 0;
  double ci_halfwidth = 0.0;  // sum of the two 99% Wilson half-widths
};

/// `trials` samples under each hypothesis. Trial i under hypothesis h uses
/// stream(seed, i, h) for sampling and stream(seed, i, 2 + h) for the
/// detector, so results do not depend on `threads`.
RiskEstimate estimate_risk(const Detector& detector, const ModelParams& params, std::uint64_t trials,
                           std::uint64_t seed, unsigned threads = 1);

/// Exact laws of H0 and H1 over every observation on n vertices, for
/// C(n,2) <= kExactRiskMaxPairs. Probabilities under H1 are summed copy by
/// copy from the model definition.
class ExactRiskTable {
 public:
  static constexpr std::size_t kExactRiskMaxPairs = 21;

  explicit ExactRiskTable(const ModelParams& params);

  std::size_t observation_count() const noexcept { return null_.size(); }
  Observation observation(std::size_t index) const;

  /// 1/2 Σ |P0(G) − P1(G)|.
  double total_variation() const;

  struct Risk {
    double type1 = 0.0;
    double type2 = 0.0;
    double risk = 0.0;
  };
  Risk risk(const std::function<bool(const Observation&)>& test) const;

 private:
  std::size_t n_;
  std::vector<double> null_;
  std::vector<double> planted_;
};

}  // namespace planted
