#pragma once

#include <optional>

namespace qexcess {

/// Numerical thresholds. The underlying mathematics is exact; every cutoff
/// here is a floating-point decision and is echoed in reports.
struct ToleranceConfig {
  /// Absolute gap for grouping inner-product values. Unset means 1e-8 * scale,
  /// where scale is the squared radius m (or the graph degree).
  std::optional<double> cluster_tol;
  /// Singular-value cutoff relative to the largest singular value.
  double rank_tol = 1e-9;
  /// Threshold for matrix-identity residuals.
  double cert_tol = 1e-8;

  double cluster_tolerance(double scale) const;

  /// Throws InvalidTolerance unless every threshold is strictly positive.
  void validate() const;
};

/// Width of the band around a rank cutoff inside which a singular value is
/// considered too close to call.
inline constexpr double kRankAmbiguityFactor = 100.0;

}  // namespace qexcess
