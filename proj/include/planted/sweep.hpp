#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "planted/detectors.hpp"
#include "planted/risk.hpp"

namespace planted {

/// Grid of risk experiments. `family` is a family spec in which "{}" is
/// replaced by each entry of `sizes`, or by ⌊n^β⌋ for each entry of
/// `betas`; without "{}" the family is fixed. Points run in the order
/// size (or β), n, p, q, each with the same seed.
struct SweepSpec {
  DetectorKind detector = DetectorKind::Count;
  std::string family;
  std::vector<std::size_t> sizes;
  std::vector<double> betas;
  std::vector<std::size_t> ns;
  std::vector<double> ps;
  std::vector<double> qs;
  std::uint64_t trials = 100;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  DetectorConfig config{};
  /// When false, elapsed_ms is written as 0 so output is byte-identical
  /// across runs.
  bool record_timing = true;
};

struct SweepRow {
  std::string detector;
  std::string family;
  std::size_t n = 0;
  double p = 0.0;
  double q = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::optional<RiskEstimate> estimate;  // empty when `error` is set
  double elapsed_ms = 0.0;
  std::string error;
};

/// One row per grid point. Library errors at a point are recorded in the
/// row and the sweep continues. Throws InvalidArgument for an empty grid.
std::vector<SweepRow> sweep_grid(const SweepSpec& spec);

std::string csv_header();
std::string csv_line(const SweepRow& row);
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace planted
