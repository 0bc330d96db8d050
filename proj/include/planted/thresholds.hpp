#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "planted/stats.hpp"

namespace planted {

/// Growth exponents of a polynomial family: χ² = n^{−α}, |v| = n^β,
/// |e| = |v|^ε, d_max = |v|^δ, μ = |v|^ζ.
struct PolyFamilyExponents {
  double alpha = 0.0;
  double beta = 0.5;
  double epsilon = 1.0;
  double delta = 0.0;
  double zeta = 0.0;
};

/// Human-readable notes for tuples violating ζ <= δ <= 1 <= ε <= 2 or the
/// ranges of α and β. Empty when consistent.
std::vector<std::string> consistency_warnings(const PolyFamilyExponents& exp);

/// β thresholds of the sparse regime; a/0 counts as +∞.
struct SparseThresholds {
  double stat_lower = 0.0;  // weak detection impossible below
  double stat_upper = 0.0;  // strong detection possible above
  double comp_lower = 0.0;  // polynomial-time detection impossible below
};

/// Throws InvalidArgument for negative or non-finite exponents.
SparseThresholds sparse_thresholds(const PolyFamilyExponents& exp);

/// min(α, α/4 + 1/2). Throws AlphaOutOfRange unless 0 < α <= 2.
double superdense_threshold(double alpha);

/// 1 − α/2 for α <= 1, (1 − μα)/(2(1 − μ)) for 1 <= α < 1/μ. Throws
/// AlphaOutOfRange outside 0 <= α < 1/μ and InvalidArgument unless 0 < μ < 1.
double g_mu(double alpha, double mu);

enum class Regime { Impossible, Hard, Easy, Indeterminate };

std::string_view to_string(Regime regime) noexcept;

/// margin is the signed distance, in powers of n, from the binding
/// boundary; positive means above it.
struct RegimeVerdict {
  Regime verdict = Regime::Indeterminate;
  std::string binding_boundary;
  double margin = 0.0;
};

struct DenseConstants {
  double c_lower = 0.0;           // C̲ in μ <= (1−ε)·C̲·log n
  double c_upper = 0.0;           // C̄ in μ >= (1+ε)·C̄·log n
  double epsilon = 0.05;          // margin on every boundary
  double superlog_ratio = 1.0;    // μ >= ratio·log|v| counts as super-logarithmic
};

/// C̄ = 1/d_KL(p‖q), C̲ = a/(2 + a·log(1+λ²)) with a = μ/log|v| and
/// λ² = χ²(p‖q).
DenseConstants default_dense_constants(const GraphStats& stats, double p, double q);

/// Dense-regime verdict. Easy: the count (|e| >= n^{1+ε}) or degree
/// (d² >= n^{1+ε}) test succeeds, or the scan boundary is met while the
/// polynomial-time barrier does not apply. Impossible: super-logarithmic
/// density below (1−ε)C̲ log n, or sub-logarithmic density with
/// |e| ∨ d² <= n^{1−ε}. Hard: super-logarithmic density, not Impossible,
/// |e| ∨ d² <= n^{1−ε}. Otherwise Indeterminate.
RegimeVerdict classify_dense(const GraphStats& stats, std::size_t n, double lambda_sq,
                             const DenseConstants& constants);

/// Critical regime, p ≈ 1 and q = n^{−α}. σ (q = σ/n) is required when
/// α = 1 (MissingSigma otherwise); `beta_degree` selects the polynomial
/// maximum-degree case d_max = |v|^β at α = 1. Throws AlphaOutOfRange
/// unless 0 < α < 2.
RegimeVerdict critical_classify(const GraphStats& stats, std::size_t n, double alpha,
                                std::optional<double> sigma, std::optional<double> beta_degree,
                                double epsilon = 0.05);

}  // namespace planted
