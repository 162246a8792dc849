#pragma once

#include <vector>

#include "qexcess/linalg.hpp"
#include "qexcess/tolerance.hpp"

namespace qexcess {

/// n points in R^m, every row on the sphere of squared radius m.
struct PointSet {
  Matrix coords;  // n x m, rows are points

  int n() const { return static_cast<int>(coords.rows()); }
  int m() const { return static_cast<int>(coords.cols()); }
};

/// Distinct inner-product values A'(X) with their ordered-pair counts.
/// values[0] is always the squared radius m; class_of(x, y) indexes values.
struct InnerProductProfile {
  std::vector<double> values;     // sorted descending
  std::vector<long> counts;       // kappa per value
  IndexMatrix class_of;           // n x n
  double min_gap = 0.0;           // smallest gap between adjacent clusters
  double max_spread = 0.0;        // widest cluster (max - min of raw values)
  double cluster_tol = 0.0;       // tolerance the clustering was run with

  int s() const { return static_cast<int>(values.size()) - 1; }
  int n() const { return static_cast<int>(class_of.rows()); }
  double m() const { return values.front(); }
  /// Off-diagonal values A(X).
  std::vector<double> distances() const { return {values.begin() + 1, values.end()}; }
};

/// G = (1/n) sum_alpha alpha A_alpha, built from snapped representatives.
struct NormalizedGram {
  Matrix G;

  int n() const { return static_cast<int>(G.rows()); }
  /// nG, the matrix of snapped inner products.
  Matrix scaled() const { return G * static_cast<double>(n()); }
};

struct TwoDesignCertificate {
  double row_sum_residual = 0.0;      // max |(GJ)_xy|
  double idempotency_residual = 0.0;  // ||G^2 - G||_F
  int rank_of_G = 0;
  bool passed = false;
};

using CoordinateTable = std::vector<std::vector<double>>;

PointSet load_pointset(const CoordinateTable& raw, const ToleranceConfig& cfg, bool normalize);
PointSet load_pointset(const Matrix& raw, const ToleranceConfig& cfg, bool normalize);

InnerProductProfile inner_product_profile(const PointSet& ps, const ToleranceConfig& cfg);

NormalizedGram normalized_gram(const PointSet& ps, const InnerProductProfile& prof);

Matrix relation_matrix(const InnerProductProfile& prof, const PointSet& ps, double alpha);
/// Relation matrix by class index (0 is the diagonal relation).
Matrix relation_matrix(const InnerProductProfile& prof, int index);

TwoDesignCertificate check_two_design(const PointSet& ps, const ToleranceConfig& cfg);

/// Number of singular values above rank_tol * sigma_max.
int numerical_rank(const Matrix& m, double rank_tol);

}  // namespace qexcess
