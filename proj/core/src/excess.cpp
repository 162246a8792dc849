#include "qexcess/excess.hpp"

#include <cmath>
#include <sstream>

#include "qexcess/error.hpp"

namespace qexcess {

AlgebraProjection project_onto_algebra(const Matrix& F_s, const PredegreeSequence& seq, const NormalizedGram& G,
                                       int n) {
  if (F_s.rows() != n || F_s.cols() != n || G.n() != n)
    throw Error(ErrorKind::InconsistentInputs, "projector, gram and n disagree in size");
  const Matrix nG = G.scaled();
  const double n2 = static_cast<double>(n) * n;
  AlgebraProjection out;
  out.full = Matrix::Zero(n, n);
  for (int i = 0; i <= seq.s(); ++i) {
    const Matrix qi = entrywise_poly(nG, seq.q[i]);
    const double c = matrix_inner(F_s, qi) / (n2 * seq.values_at_anchor[i]);
    out.coefficients.push_back(c);
    out.full += c * qi;
  }
  const double mu = F_s.trace();
  out.single_term = entrywise_poly(nG, seq.top()) * (mu / (n * seq.values_at_anchor.back()));
  out.cross_check = frobenius(out.full - out.single_term);
  return out;
}

ExcessReport excess_report(const PointSet& ps, const InnerProductProfile& prof, const NormalizedGram& G,
                           const PredegreeSequence& seq, const HarmonicDecomposition& hd,
                           const ToleranceConfig& cfg) {
  const int n = ps.n();
  if (prof.n() != n || G.n() != n || hd.n() != n || seq.s() != prof.s())
    throw Error(ErrorKind::InconsistentInputs, "pipeline stages were built from different inputs");
  ExcessReport r;
  r.s = prof.s();
  r.S = hd.S;
  r.hypothesis_met = hd.S == r.s;
  const Matrix& top = hd.F.back();
  const Vector excess = hd.excess();
  r.per_point_excess.assign(excess.data(), excess.data() + excess.size());
  r.mu = top.trace();
  r.bound = seq.values_at_anchor.back();
  r.gap = r.bound - r.mu;
  r.equality = std::abs(r.gap) <= cfg.cert_tol * r.bound;
  const auto proj = project_onto_algebra(top, seq, G, n);
  const Matrix diff = top - proj.full;
  r.projection_residual = frobenius(diff);
  r.pythagoras_residual = std::abs((r.mu - r.mu * r.mu / r.bound) - diff.squaredNorm());
  return r;
}

QPolyCertificate qpoly_certificate(const HarmonicDecomposition& hd, const PredegreeSequence& seq,
                                   const NormalizedGram& G, int n, const ToleranceConfig& cfg) {
  if (hd.n() != n || G.n() != n) throw Error(ErrorKind::InconsistentInputs, "decomposition, gram and n disagree");
  if (hd.S != seq.s()) {
    std::ostringstream os;
    os << "degree S = " << hd.S << " is below s = " << seq.s() << "; the certificate is undefined";
    throw Error(ErrorKind::HypothesisViolated, os.str());
  }
  const Matrix nG = G.scaled();
  QPolyCertificate cert;
  for (int i = 0; i <= seq.s(); ++i)
    cert.per_index_residuals.push_back(frobenius(hd.F[i] - entrywise_poly(nG, seq.q[i]) / static_cast<double>(n)));
  cert.certified = cert.per_index_residuals.back() <= cfg.cert_tol;
  if (cert.certified)
    for (double r : cert.per_index_residuals) cert.lemma_consistent = cert.lemma_consistent && r <= cfg.cert_tol;
  return cert;
}

}  // namespace qexcess
