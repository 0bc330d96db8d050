#include "planted/sweep.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "planted/error.hpp"
#include "planted/families.hpp"

namespace planted {

namespace {

std::string fill_template(const std::string& family, std::size_t size) {
  const auto hole = family.find("{}");
  if (hole == std::string::npos) return family;
  return family.substr(0, hole) + std::to_string(size) + family.substr(hole + 2);
}

std::string format_float(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.6g", x);
  return buffer;
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

std::vector<SweepRow> sweep_grid(const SweepSpec& spec) {
  if (spec.ns.empty() || spec.ps.empty() || spec.qs.empty()) {
    fail(ErrorCode::InvalidArgument, "sweep grid needs at least one n, p and q");
  }
  if (spec.trials == 0) fail(ErrorCode::InvalidArgument, "trials must be >= 1");
  const bool templated = spec.family.find("{}") != std::string::npos;
  if (templated && spec.sizes.empty() == spec.betas.empty()) {
    fail(ErrorCode::InvalidArgument, "a family template needs exactly one of sizes or betas");
  }
  const std::size_t outer = !templated ? 1 : spec.sizes.empty() ? spec.betas.size() : spec.sizes.size();

  std::vector<SweepRow> rows;
  for (std::size_t s = 0; s < outer; ++s) {
    for (std::size_t n : spec.ns) {
      std::string family = spec.family;
      if (templated) {
        const std::size_t size = spec.sizes.empty()
                                     ? static_cast<std::size_t>(std::floor(std::pow(static_cast<double>(n), spec.betas[s])))
                                     : spec.sizes[s];
        family = fill_template(spec.family, size);
      }
      for (double p : spec.ps) {
        for (double q : spec.qs) {
          SweepRow row;
          row.detector = std::string(to_string(spec.detector));
          row.family = family;
          row.n = n;
          row.p = p;
          row.q = q;
          row.trials = spec.trials;
          row.seed = spec.seed;
          const auto start = std::chrono::steady_clock::now();
          try {
            ModelParams params{n, p, q, make_family(parse_family(family))};
            const Detector detector = make_detector(spec.detector, params, spec.config);
            row.estimate = estimate_risk(detector, params, spec.trials, spec.seed, spec.threads);
          } catch (const Error& e) {
            row.error = e.what();
          }
          if (spec.record_timing) {
            row.elapsed_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
          }
          rows.push_back(std::move(row));
        }
      }
    }
  }
  return rows;
}

std::string csv_header() { return "detector,family,n,p,q,trials,seed,type1,type2,risk,ci,elapsed_ms,error"; }

std::string csv_line(const SweepRow& row) {
  std::string line = csv_field(row.detector) + "," + csv_field(row.family) + "," + std::to_string(row.n) + "," +
                     format_float(row.p) + "," + format_float(row.q) + "," + std::to_string(row.trials) + "," +
                     std::to_string(row.seed) + ",";
  if (row.estimate) {
    line += format_float(row.estimate->type1) + "," + format_float(row.estimate->type2) + "," +
            format_float(row.estimate->risk) + "," + format_float(row.estimate->ci_halfwidth) + ",";
  } else {
    line += ",,,,";
  }
  line += format_float(row.elapsed_ms) + "," + csv_field(row.error);
  return line;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << csv_header() << '\n';
  for (const SweepRow& row : rows) out << csv_line(row) << '\n';
}

}  // namespace planted
