#include "planted/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "planted/error.hpp"
#include "planted/numeric.hpp"

namespace planted {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double ratio_or_inf(double a, double b) { return b == 0.0 ? kInf : a / b; }

double log_base(double x, double n) { return std::log(x) / std::log(n); }

RegimeVerdict verdict(Regime r, std::string boundary, double margin) { return {r, std::move(boundary), margin}; }

bool is_one(double alpha) { return std::abs(alpha - 1.0) < 1e-12; }

double bernoulli_kl(double p, double q) {
  auto term = [](double a, double b) { return a == 0.0 ? 0.0 : a * std::log(a / b); };
  return term(p, q) + term(1.0 - p, 1.0 - q);
}

}  // namespace

std::vector<std::string> consistency_warnings(const PolyFamilyExponents& e) {
  std::vector<std::string> notes;
  if (e.zeta > e.delta) notes.emplace_back("zeta exceeds delta; a graph's density cannot exceed its maximum degree");
  if (e.delta > 1.0) notes.emplace_back("delta exceeds 1; the maximum degree cannot exceed |v|");
  if (e.epsilon < 1.0) notes.emplace_back("epsilon below 1; a pattern without isolated vertices has |e| >= |v|/2");
  if (e.epsilon > 2.0) notes.emplace_back("epsilon above 2; |e| cannot exceed |v|^2");
  if (e.alpha < 0.0 || e.alpha > 2.0) notes.emplace_back("alpha outside [0, 2]");
  if (e.beta <= 0.0 || e.beta >= 1.0) notes.emplace_back("beta outside (0, 1)");
  return notes;
}

SparseThresholds sparse_thresholds(const PolyFamilyExponents& e) {
  for (double x : {e.alpha, e.epsilon, e.delta, e.zeta}) {
    if (!std::isfinite(x) || x < 0.0) fail(ErrorCode::InvalidArgument, "exponents must be finite and nonnegative");
  }
  SparseThresholds t;
  const double by_density = ratio_or_inf(e.alpha, e.zeta);
  const double by_edges = ratio_or_inf(2.0 + e.alpha, 2.0 * e.epsilon);
  const double by_degree = ratio_or_inf(1.0 + e.alpha, 2.0 * e.delta);
  t.stat_lower = std::min({by_density, ratio_or_inf(1.0 + e.alpha, 2.0 * e.delta + e.zeta), by_edges});
  t.stat_upper = std::min({by_density, by_degree, by_edges});
  t.comp_lower = std::min(by_degree, by_edges);
  return t;
}

double superdense_threshold(double alpha) {
  if (!(alpha > 0.0 && alpha <= 2.0)) fail(ErrorCode::AlphaOutOfRange, "alpha must lie in (0, 2]");
  return std::min(alpha, alpha / 4.0 + 0.5);
}

double g_mu(double alpha, double mu) {
  if (!(mu > 0.0 && mu < 1.0)) fail(ErrorCode::InvalidArgument, "mu must lie in (0, 1)");
  if (!(alpha >= 0.0 && alpha < 1.0 / mu)) fail(ErrorCode::AlphaOutOfRange, "alpha must lie in [0, 1/mu)");
  if (alpha <= 1.0) return 1.0 - alpha / 2.0;
  return (1.0 - mu * alpha) / (2.0 * (1.0 - mu));
}

std::string_view to_string(Regime regime) noexcept {
  switch (regime) {
    case Regime::Impossible:
      return "impossible";
    case Regime::Hard:
      return "hard";
    case Regime::Easy:
      return "easy";
    case Regime::Indeterminate:
      return "indeterminate";
  }
  return "unknown";
}

DenseConstants default_dense_constants(const GraphStats& stats, double p, double q) {
  if (!(q > 0.0 && q < 1.0)) fail(ErrorCode::DegenerateQ, "q must lie strictly between 0 and 1");
  if (!(p > q && p <= 1.0)) fail(ErrorCode::InvalidArgument, "p must lie in (q, 1]");
  if (stats.num_vertices < 2) fail(ErrorCode::InvalidArgument, "pattern needs at least 2 vertices");
  DenseConstants c;
  c.c_upper = 1.0 / bernoulli_kl(p, q);
  const double lambda_sq = (p - q) * (p - q) / (q * (1.0 - q));
  const double a = to_double(stats.max_subgraph_density) / std::log(static_cast<double>(stats.num_vertices));
  c.c_lower = a / (2.0 + a * std::log1p(lambda_sq));
  return c;
}

RegimeVerdict classify_dense(const GraphStats& stats, std::size_t n, double lambda_sq,
                             const DenseConstants& c) {
  if (n <= stats.num_vertices) fail(ErrorCode::InvalidArgument, "n must exceed |v(pattern)|");
  if (stats.num_vertices < 2 || stats.num_edges == 0) fail(ErrorCode::EmptyGraph, "pattern has no edges");
  if (!(lambda_sq > 0.0)) fail(ErrorCode::InvalidArgument, "lambda_sq must be positive");
  const double nn = static_cast<double>(n);
  const double ln_n = std::log(nn);
  const double eps = c.epsilon;
  const double mu = to_double(stats.max_subgraph_density);
  const double edges = static_cast<double>(stats.num_edges);
  const double d_sq = static_cast<double>(stats.max_degree) * static_cast<double>(stats.max_degree);
  const double poly = std::max(edges, d_sq);
  const bool superlog = mu >= c.superlog_ratio * std::log(static_cast<double>(stats.num_vertices));

  if (edges >= std::pow(nn, 1.0 + eps)) return verdict(Regime::Easy, "count", log_base(edges, nn) - 1.0 - eps);
  if (d_sq >= std::pow(nn, 1.0 + eps)) return verdict(Regime::Easy, "degree", log_base(d_sq, nn) - 1.0 - eps);

  const double poly_margin = log_base(poly, nn) - (1.0 - eps);
  const bool below_poly = poly <= std::pow(nn, 1.0 - eps);
  if (superlog) {
    const double lower = (1.0 - eps) * c.c_lower * ln_n;
    const double upper = (1.0 + eps) * c.c_upper * ln_n;
    if (mu <= lower) return verdict(Regime::Impossible, "density_lower", log_base(mu / lower, nn));
    if (below_poly) return verdict(Regime::Hard, "low_degree", poly_margin);
    if (mu >= upper) return verdict(Regime::Easy, "scan", log_base(mu / upper, nn));
    return verdict(Regime::Indeterminate, "density_gap", log_base(mu / upper, nn));
  }
  if (below_poly) return verdict(Regime::Impossible, "edges_degree", poly_margin);
  return verdict(Regime::Indeterminate, "edges_degree_gap", log_base(poly, nn) - 1.0 - eps);
}

RegimeVerdict critical_classify(const GraphStats& stats, std::size_t n, double alpha,
                                std::optional<double> sigma, std::optional<double> beta_degree,
                                double epsilon) {
  if (!(alpha > 0.0 && alpha < 2.0)) fail(ErrorCode::AlphaOutOfRange, "alpha must lie in (0, 2)");
  if (n <= stats.num_vertices) fail(ErrorCode::InvalidArgument, "n must exceed |v(pattern)|");
  if (stats.num_edges == 0) fail(ErrorCode::EmptyGraph, "pattern has no edges");
  const double nn = static_cast<double>(n);
  const double ln_n = std::log(nn);
  const double eps = epsilon;
  const double mu = to_double(stats.max_subgraph_density);
  const double edges = static_cast<double>(stats.num_edges);
  const double d = static_cast<double>(stats.max_degree);
  const double d_sq = d * d;
  const double verts = static_cast<double>(stats.num_vertices);
  const double e_exp = log_base(edges, nn);
  const double d_exp = log_base(d, nn);

  if (alpha * mu >= 1.0) return verdict(Regime::Easy, "scan_trivial", alpha * mu - 1.0);

  if (mu >= 1.0) {
    const double poly_exp = log_base(std::max(edges, d_sq), nn);
    if (poly_exp <= 1.0 - alpha * mu - eps) {
      return verdict(Regime::Impossible, "edges_degree", poly_exp - (1.0 - alpha * mu - eps));
    }
    if (e_exp >= 1.0 - alpha / 2.0 + eps) return verdict(Regime::Easy, "count", e_exp - (1.0 - alpha / 2.0 + eps));
    if (2.0 * d_exp >= 1.0 - alpha + eps) return verdict(Regime::Easy, "degree", 2.0 * d_exp - (1.0 - alpha + eps));
    return verdict(Regime::Indeterminate, "edges_degree_gap", poly_exp - (1.0 - alpha * mu - eps));
  }

  if (alpha < 1.0 && !is_one(alpha)) {
    const double e_line = 1.0 - alpha / 2.0;
    const double d_line = (1.0 - alpha) / 2.0;
    if (e_exp <= e_line - eps && d_exp <= d_line - eps) {
      return verdict(Regime::Impossible, "edges_and_degree", std::max(e_exp - e_line, d_exp - d_line));
    }
    if (e_exp >= e_line + eps) return verdict(Regime::Easy, "count", e_exp - e_line - eps);
    if (d_exp >= d_line + eps) return verdict(Regime::Easy, "degree", d_exp - d_line - eps);
    return verdict(Regime::Indeterminate, "edges_degree_gap", std::max(e_exp - e_line, d_exp - d_line));
  }

  if (is_one(alpha)) {
    if (!sigma) fail(ErrorCode::MissingSigma, "alpha = 1 requires sigma (q = sigma/n)");
    if (!(*sigma > 0.0)) fail(ErrorCode::InvalidArgument, "sigma must be positive");
    if (beta_degree) {
      const double beta = *beta_degree;
      if (!(beta > 0.0 && beta <= 1.0)) fail(ErrorCode::InvalidArgument, "beta_degree must lie in (0, 1]");
      const bool small_degree = std::pow(d, 1.0 / beta) * std::log(d) <= (1.0 - eps) / 2.0 * ln_n;
      if (e_exp <= 0.5 - eps && small_degree) return verdict(Regime::Impossible, "polynomial_degree", e_exp - 0.5);
      if (e_exp >= 0.5 + eps) return verdict(Regime::Easy, "count", e_exp - 0.5 - eps);
      if (d >= (16.0 + eps) * ln_n) return verdict(Regime::Easy, "degree", log_base(d / ((16.0 + eps) * ln_n), nn));
      return verdict(Regime::Indeterminate, "polynomial_degree_gap", e_exp - 0.5);
    }
    const double sigma_upper = 2.0 * std::exp(1.0) * d_sq;
    if (*sigma > sigma_upper) {
      if (e_exp <= 0.5 - eps) return verdict(Regime::Impossible, "bounded_degree_dense_sigma", e_exp - 0.5);
      if (e_exp >= 0.5 + eps) return verdict(Regime::Easy, "count", e_exp - 0.5 - eps);
      return verdict(Regime::Indeterminate, "bounded_degree_dense_sigma_gap", e_exp - 0.5);
    }
    if (*sigma < 1.0) {
      const double beta = -std::log(1.0 - mu) / std::log(verts);
      const double low = std::log(std::exp(1.0) * d_sq / *sigma) / (1.0 + eps) * ln_n;
      const double high = (1.0 + eps) * std::pow(ln_n, 1.0 / beta);
      if (verts <= low) return verdict(Regime::Impossible, "bounded_degree_sparse_sigma", log_base(verts / low, nn));
      if (verts >= high) return verdict(Regime::Easy, "scan", log_base(verts / high, nn));
      return verdict(Regime::Indeterminate, "bounded_degree_sparse_sigma_gap", log_base(verts / high, nn));
    }
    return verdict(Regime::Indeterminate, "sigma_gap", 0.0);
  }

  // 1 < α < 1/μ with μ < 1.
  const double g = g_mu(alpha, mu);
  const double v_exp = log_base(verts, nn);
  if (v_exp <= g - eps) return verdict(Regime::Impossible, "vertices_lower", v_exp - g);
  const double easy_line = 1.0 - alpha / 2.0;
  if (v_exp >= easy_line + eps) return verdict(Regime::Easy, "vertices_upper", v_exp - easy_line - eps);
  return verdict(Regime::Indeterminate, "vertices_gap", v_exp - g);
}

}  // namespace planted
