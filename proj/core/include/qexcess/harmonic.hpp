#pragma once

#include <vector>

#include "qexcess/pointset.hpp"

namespace qexcess {

/// Columns zeta_a(t^j) for a in X, 0 <= j <= k; block j is (nG)∘j.
struct ZonalBasis {
  int degree_cap = 0;
  Matrix columns;  // n x n(k+1)

  int span_dimension(double rank_tol) const { return numerical_rank(columns, rank_tol); }
};

ZonalBasis zonal_basis(const NormalizedGram& G, int k);

/// Projection matrices F_0..F_S onto Harm_0(X)..Harm_S(X).
struct HarmonicDecomposition {
  std::vector<Matrix> F;
  std::vector<int> dims;
  int S = 0;
  /// Smallest ratio sigma / cutoff among accepted singular values, and largest
  /// among rejected ones. Both stay clear of 1 by kRankAmbiguityFactor.
  double weakest_accepted = 0.0;
  double strongest_rejected = 0.0;

  int n() const { return F.empty() ? 0 : static_cast<int>(F.front().rows()); }
  /// n (F_S)_{xx}
  Vector excess() const;
};

/// Refuses (NotATwoDesign) unless check_two_design passes.
HarmonicDecomposition harmonic_decomposition(const PointSet& ps, const NormalizedGram& G,
                                             const ToleranceConfig& cfg);

/// Layered projectors from an arbitrary sequence of spanning blocks: layer k
/// is the part of span(blocks[0..k]) orthogonal to span(blocks[0..k-1]).
/// Stops at the first k whose cumulative span is everything.
HarmonicDecomposition layered_projectors(const std::vector<Matrix>& blocks, const ToleranceConfig& cfg);

struct LemmaResidual {
  int j = 0;  // projector index
  int i = 0;  // Hadamard power
  double residual = 0.0;
};

struct ProjectionIdentityReport {
  double f0_residual = 0.0;            // ||F_0 - J/n||
  double f1_residual = 0.0;            // ||F_1 - G||
  std::vector<LemmaResidual> vanishing;  // ||F_j (nG)∘i / n|| for j > i
  double completeness_residual = 0.0;  // ||sum F_i - I||
  double orthogonality_residual = 0.0; // max ||F_i F_j - delta F_i||
  double trace_f0 = 0.0;

  double max_vanishing() const;
  double max_residual() const;
};

ProjectionIdentityReport verify_projection_identities(const HarmonicDecomposition& hd, const NormalizedGram& G);

}  // namespace qexcess
