#pragma once

#include <optional>
#include <vector>

#include "qexcess/pointset.hpp"
#include "qexcess/polynomial.hpp"
#include "qexcess/tolerance.hpp"

namespace qexcess {

/// Finite positive measure: <p, q> = sum_i weights[i] p(points[i]) q(points[i]).
/// Both the inner-product profile of a point set and the spectrum of a graph
/// are instances.
struct DiscreteMeasure {
  std::vector<double> points;
  std::vector<double> weights;

  double inner(const Polynomial& p, const Polynomial& q) const;
  std::size_t size() const { return points.size(); }
};

/// kappa_alpha / n^2 on A'(X).
DiscreteMeasure profile_measure(const InnerProductProfile& prof);

/// Orthogonal polynomials q_0..q_s for a measure with s+1 support points,
/// normalized by <q_k, q_k> = q_k(anchor).
///
/// Recurrence t q_k = lower[k] q_{k-1} + diag[k] q_k + upper[k] q_{k+1}
/// holds modulo the support polynomial; lower[0] = upper[s] = 0.
struct PredegreeSequence {
  std::vector<Polynomial> q;
  std::vector<double> lower;  // b*_{k-1}
  std::vector<double> diag;   // a*_k
  std::vector<double> upper;  // c*_{k+1}
  std::vector<double> values_at_anchor;
  double anchor = 0.0;

  int s() const { return static_cast<int>(q.size()) - 1; }
  const Polynomial& top() const { return q.back(); }
};

/// Gram-Schmidt on 1, t, ..., t^s with one re-orthogonalization pass.
/// Throws DegenerateMeasure if a monomial is numerically dependent on its
/// predecessors and NonPositiveNormalization if some e_k(anchor) <= 0.
PredegreeSequence orthogonal_sequence(const DiscreteMeasure& measure, double anchor,
                                      const ToleranceConfig& cfg);

double support_inner_product(const Polynomial& p, const Polynomial& q, const InnerProductProfile& prof);

PredegreeSequence predegree_sequence(const InnerProductProfile& prof, double m, const ToleranceConfig& cfg);

/// Monic recurrence e_{k+1} = (t - alpha_k) e_k - beta_k e_{k-1}, computed by
/// the Stieltjes procedure. Independent of the Gram-Schmidt route.
struct MonicRecurrence {
  std::vector<double> alpha;
  std::vector<double> beta;  // beta[0] = 0
  std::vector<Polynomial> e;
};
MonicRecurrence monic_recurrence(const DiscreteMeasure& measure);

/// Largest measure-norm of t q_k - (lower q_{k-1} + diag q_k + upper q_{k+1}).
double recurrence_residual(const PredegreeSequence& seq, const DiscreteMeasure& measure);

/// Largest |<q_k, q_h> - delta_kh q_k(anchor)| / q_k(anchor).
double orthogonality_residual(const PredegreeSequence& seq, const DiscreteMeasure& measure);

/// n * prod_{a in nodes} (t - a) / (anchor - a).
Polynomial sum_identity_polynomial(std::span<const double> nodes, double anchor, int n);

struct SumIdentityReport {
  Polynomial H;
  Polynomial sum_q;
  double coefficient_residual = 0.0;
  std::optional<double> gram_residual;  // ||(1/n) (sum q_k)((nG)∘) - I||_F
};

SumIdentityReport hoffman_sum_check(const PredegreeSequence& seq, const InnerProductProfile& prof, int n,
                                    double m, const NormalizedGram* gram = nullptr);

}  // namespace qexcess
