#pragma once

#include <vector>

#include "qexcess/harmonic.hpp"
#include "qexcess/orthopoly.hpp"
#include "qexcess/pointset.hpp"

namespace qexcess {

/// Mean excess of the top harmonic layer against the bound q_s(m).
///
/// When S < s the top projector F_s does not exist; the report then uses F_S,
/// sets hypothesis_met = false, and the comparison carries no theorem.
struct ExcessReport {
  int s = 0;
  int S = 0;
  bool hypothesis_met = false;
  std::vector<double> per_point_excess;  // n (F_top)_{xx}
  double mu = 0.0;                       // trace F_top
  double bound = 0.0;                    // q_s(m)
  double gap = 0.0;                      // bound - mu
  bool equality = false;                 // |gap| <= cert_tol * bound
  double projection_residual = 0.0;      // ||F_top - projection onto the algebra||_F
  double pythagoras_residual = 0.0;      // |(mu - mu^2/q_s(m)) - ||F_s - F~_s||^2|
};

/// Projection of a matrix onto span{q_i((nG)∘)} under tr(RᵀS).
struct AlgebraProjection {
  Matrix full;         // sum over all i
  Matrix single_term;  // (mu / (n q_s(m))) q_s((nG)∘)
  std::vector<double> coefficients;  // tr(F q_i((nG)∘)) / (n^2 q_i(m))
  double cross_check = 0.0;          // ||full - single_term||_F
};

AlgebraProjection project_onto_algebra(const Matrix& F_s, const PredegreeSequence& seq, const NormalizedGram& G,
                                       int n);

ExcessReport excess_report(const PointSet& ps, const InnerProductProfile& prof, const NormalizedGram& G,
                           const PredegreeSequence& seq, const HarmonicDecomposition& hd,
                           const ToleranceConfig& cfg);

/// Residuals ||F_i - (1/n) q_i((nG)∘)||_F for i = 0..s.
struct QPolyCertificate {
  std::vector<double> per_index_residuals;
  bool certified = false;         // decided by the index-s residual alone
  bool lemma_consistent = true;   // certified implies every residual is small
};

/// Throws HypothesisViolated when S < s.
QPolyCertificate qpoly_certificate(const HarmonicDecomposition& hd, const PredegreeSequence& seq,
                                   const NormalizedGram& G, int n, const ToleranceConfig& cfg);

}  // namespace qexcess
