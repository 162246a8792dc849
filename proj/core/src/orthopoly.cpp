#include "qexcess/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qexcess/error.hpp"

namespace qexcess {

double DiscreteMeasure::inner(const Polynomial& p, const Polynomial& q) const {
  double acc = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) acc += weights[i] * p(points[i]) * q(points[i]);
  return acc;
}

DiscreteMeasure profile_measure(const InnerProductProfile& prof) {
  DiscreteMeasure mu;
  const double n2 = static_cast<double>(prof.n()) * prof.n();
  mu.points = prof.values;
  mu.weights.reserve(prof.counts.size());
  for (long k : prof.counts) mu.weights.push_back(static_cast<double>(k) / n2);
  return mu;
}

double support_inner_product(const Polynomial& p, const Polynomial& q, const InnerProductProfile& prof) {
  return profile_measure(prof).inner(p, q);
}

PredegreeSequence orthogonal_sequence(const DiscreteMeasure& measure, double anchor,
                                      const ToleranceConfig& cfg) {
  if (measure.points.empty() || measure.points.size() != measure.weights.size())
    throw Error(ErrorKind::DegenerateMeasure, "measure needs matching, nonempty points and weights");
  for (double w : measure.weights)
    if (!(w > 0.0)) throw Error(ErrorKind::DegenerateMeasure, "measure weights must be positive");

  const int s = static_cast<int>(measure.size()) - 1;
  std::vector<Polynomial> e;
  std::vector<double> norms;
  for (int k = 0; k <= s; ++k) {
    const Polynomial tk = Polynomial::monomial(k);
    Polynomial ek = tk;
    for (int pass = 0; pass < 2; ++pass)
      for (int j = 0; j < k; ++j) ek -= e[j] * (measure.inner(ek, e[j]) / norms[j]);
    const double nk = measure.inner(ek, ek);
    const double ref = measure.inner(tk, tk);
    if (!(nk > 0.0) || std::sqrt(nk / ref) <= cfg.rank_tol) {
      std::ostringstream os;
      os << "t^" << k << " is numerically dependent on lower degrees (relative norm "
         << std::sqrt(std::max(nk, 0.0) / ref) << ")";
      throw Error(ErrorKind::DegenerateMeasure, os.str());
    }
    e.push_back(std::move(ek));
    norms.push_back(nk);
  }

  PredegreeSequence seq;
  seq.anchor = anchor;
  for (int k = 0; k <= s; ++k) {
    const double at_anchor = e[k](anchor);
    if (!(at_anchor > 0.0)) {
      std::ostringstream os;
      os << "e_" << k << "(" << anchor << ") = " << at_anchor << " is not positive";
      throw Error(ErrorKind::NonPositiveNormalization, os.str());
    }
    Polynomial qk = e[k] * (at_anchor / norms[k]);
    seq.values_at_anchor.push_back(qk(anchor));
    seq.q.push_back(std::move(qk));
  }

  // Fourier coefficients of t q_k against q_j, j = k-1, k, k+1.
  seq.lower.assign(s + 1, 0.0);
  seq.diag.assign(s + 1, 0.0);
  seq.upper.assign(s + 1, 0.0);
  for (int k = 0; k <= s; ++k) {
    const Polynomial tq = seq.q[k].times_t();
    auto fourier = [&](int j) { return measure.inner(tq, seq.q[j]) / seq.values_at_anchor[j]; };
    if (k > 0) seq.lower[k] = fourier(k - 1);
    seq.diag[k] = fourier(k);
    if (k < s) seq.upper[k] = fourier(k + 1);
  }
  return seq;
}

PredegreeSequence predegree_sequence(const InnerProductProfile& prof, double m, const ToleranceConfig& cfg) {
  return orthogonal_sequence(profile_measure(prof), m, cfg);
}

MonicRecurrence monic_recurrence(const DiscreteMeasure& measure) {
  MonicRecurrence rec;
  const int s = static_cast<int>(measure.size()) - 1;
  Polynomial prev;
  Polynomial cur = Polynomial::constant(1.0);
  double prev_norm = 0.0;
  for (int k = 0; k <= s; ++k) {
    const double norm = measure.inner(cur, cur);
    const double alpha = measure.inner(cur.times_t(), cur) / norm;
    const double beta = k == 0 ? 0.0 : norm / prev_norm;
    rec.alpha.push_back(alpha);
    rec.beta.push_back(beta);
    rec.e.push_back(cur);
    Polynomial next = cur.times_t() - cur * alpha;
    if (k > 0) next -= prev * beta;
    prev = std::move(cur);
    cur = std::move(next);
    prev_norm = norm;
  }
  return rec;
}

double recurrence_residual(const PredegreeSequence& seq, const DiscreteMeasure& measure) {
  const int s = seq.s();
  double worst = 0.0;
  for (int k = 0; k <= s; ++k) {
    Polynomial r = seq.q[k].times_t() - seq.q[k] * seq.diag[k];
    if (k > 0) r -= seq.q[k - 1] * seq.lower[k];
    if (k < s) r -= seq.q[k + 1] * seq.upper[k];
    worst = std::max(worst, std::sqrt(std::max(0.0, measure.inner(r, r))));
  }
  return worst;
}

double orthogonality_residual(const PredegreeSequence& seq, const DiscreteMeasure& measure) {
  double worst = 0.0;
  for (int k = 0; k <= seq.s(); ++k)
    for (int h = 0; h <= seq.s(); ++h) {
      const double expected = k == h ? seq.values_at_anchor[k] : 0.0;
      worst = std::max(worst, std::abs(measure.inner(seq.q[k], seq.q[h]) - expected) /
                                  seq.values_at_anchor[k]);
    }
  return worst;
}

Polynomial sum_identity_polynomial(std::span<const double> nodes, double anchor, int n) {
  Polynomial h = Polynomial::constant(static_cast<double>(n));
  for (double a : nodes) h = (h.times_t() - h * a) * (1.0 / (anchor - a));
  return h;
}

SumIdentityReport hoffman_sum_check(const PredegreeSequence& seq, const InnerProductProfile& prof, int n,
                                    double m, const NormalizedGram* gram) {
  if (seq.s() != prof.s()) throw Error(ErrorKind::InconsistentInputs, "sequence length differs from profile");
  SumIdentityReport report;
  const auto nodes = prof.distances();
  report.H = sum_identity_polynomial(nodes, m, n);
  for (const auto& q : seq.q) report.sum_q += q;
  report.coefficient_residual = max_coefficient_difference(report.H, report.sum_q);
  if (gram) {
    if (gram->n() != n) throw Error(ErrorKind::InconsistentInputs, "gram size differs from n");
    const Matrix HG = entrywise_poly(gram->scaled(), report.sum_q) / static_cast<double>(n);
    report.gram_residual = frobenius(HG - Matrix::Identity(n, n));
  }
  return report;
}

}  // namespace qexcess
