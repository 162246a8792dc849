#include "qexcess/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qexcess/error.hpp"

namespace qexcess {

ZonalBasis zonal_basis(const NormalizedGram& G, int k) {
  if (k < 0) throw Error(ErrorKind::InvalidInput, "degree cap must be nonnegative");
  const int n = G.n();
  const Matrix nG = G.scaled();
  ZonalBasis basis{k, Matrix(n, static_cast<Eigen::Index>(n) * (k + 1))};
  Matrix power = Matrix::Ones(n, n);
  for (int j = 0; j <= k; ++j) {
    basis.columns.middleCols(static_cast<Eigen::Index>(j) * n, n) = power;
    power = power.cwiseProduct(nG);
  }
  return basis;
}

Vector HarmonicDecomposition::excess() const {
  return F.back().diagonal() * static_cast<double>(n());
}

HarmonicDecomposition layered_projectors(const std::vector<Matrix>& blocks, const ToleranceConfig& cfg) {
  if (blocks.empty()) throw Error(ErrorKind::InvalidInput, "no spanning blocks supplied");
  const Eigen::Index n = blocks.front().rows();
  HarmonicDecomposition hd;
  hd.weakest_accepted = std::numeric_limits<double>::infinity();
  Matrix basis(n, 0);  // orthonormal columns spanning the layers found so far

  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const Matrix& block = blocks[k];
    if (block.rows() != n) throw Error(ErrorKind::InconsistentInputs, "spanning blocks differ in row count");
    const double reference = Eigen::JacobiSVD<Matrix>(block).singularValues()(0);
    Matrix residual = block;
    for (int pass = 0; pass < 2; ++pass) residual -= basis * (basis.transpose() * residual);

    Eigen::JacobiSVD<Matrix> svd(residual, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    const double cutoff = cfg.rank_tol * reference;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
      const double ratio = sv(i) / cutoff;
      if (ratio > 1.0 / kRankAmbiguityFactor && ratio <= kRankAmbiguityFactor) {
        std::ostringstream os;
        os << "layer " << k << ": singular value " << sv(i) << " lies within a factor "
           << kRankAmbiguityFactor << " of the cutoff " << cutoff;
        throw Error(ErrorKind::RankAmbiguity, os.str());
      }
      if (ratio > kRankAmbiguityFactor) {
        ++rank;
        hd.weakest_accepted = std::min(hd.weakest_accepted, ratio);
      } else {
        hd.strongest_rejected = std::max(hd.strongest_rejected, ratio);
      }
    }
    rank = std::min<int>(rank, static_cast<int>(n - basis.cols()));
    if (rank == 0) {
      std::ostringstream os;
      os << "layer " << k << " adds nothing before the span is complete";
      throw Error(ErrorKind::RankDeficient, os.str());
    }
    const Matrix fresh = svd.matrixU().leftCols(rank);
    hd.F.push_back(fresh * fresh.transpose());
    hd.dims.push_back(rank);
    Matrix grown(n, basis.cols() + rank);
    grown << basis, fresh;
    basis = std::move(grown);
    if (basis.cols() == n) {
      hd.S = static_cast<int>(k);
      return hd;
    }
  }
  throw Error(ErrorKind::RankDeficient, "spanning blocks never fill the whole function space");
}

HarmonicDecomposition harmonic_decomposition(const PointSet& ps, const NormalizedGram& G,
                                             const ToleranceConfig& cfg) {
  if (G.n() != ps.n()) throw Error(ErrorKind::InconsistentInputs, "gram and point set sizes differ");
  const auto cert = check_two_design(ps, cfg);
  if (!cert.passed) {
    std::ostringstream os;
    os << "harmonic decomposition needs a spherical 2-design (GJ residual " << cert.row_sum_residual
       << ", G^2-G residual " << cert.idempotency_residual << ")";
    throw Error(ErrorKind::NotATwoDesign, os.str());
  }
  const int n = G.n();
  const Matrix nG = G.scaled();
  // C(X) = Pol_s(X) with s <= n - 1, so n blocks always suffice.
  std::vector<Matrix> blocks;
  Matrix power = Matrix::Ones(n, n);
  for (int k = 0; k < n; ++k) {
    blocks.push_back(power);
    power = power.cwiseProduct(nG);
  }
  return layered_projectors(blocks, cfg);
}

double ProjectionIdentityReport::max_vanishing() const {
  double worst = 0.0;
  for (const auto& v : vanishing) worst = std::max(worst, v.residual);
  return worst;
}

double ProjectionIdentityReport::max_residual() const {
  return std::max({f0_residual, f1_residual, max_vanishing(), completeness_residual, orthogonality_residual});
}

ProjectionIdentityReport verify_projection_identities(const HarmonicDecomposition& hd, const NormalizedGram& G) {
  const int n = hd.n();
  if (G.n() != n) throw Error(ErrorKind::InconsistentInputs, "gram and decomposition sizes differ");
  ProjectionIdentityReport r;
  const double inv_n = 1.0 / n;
  r.f0_residual = frobenius(hd.F[0] - Matrix::Constant(n, n, inv_n));
  r.trace_f0 = hd.F[0].trace();
  r.f1_residual = hd.S >= 1 ? frobenius(hd.F[1] - G.G) : frobenius(G.G);

  const Matrix nG = G.scaled();
  Matrix power = Matrix::Ones(n, n);
  for (int i = 0; i < hd.S; ++i) {
    for (int j = i + 1; j <= hd.S; ++j) r.vanishing.push_back({j, i, frobenius(hd.F[j] * power) * inv_n});
    power = power.cwiseProduct(nG);
  }

  Matrix total = Matrix::Zero(n, n);
  for (const auto& f : hd.F) total += f;
  r.completeness_residual = frobenius(total - Matrix::Identity(n, n));
  for (std::size_t i = 0; i < hd.F.size(); ++i)
    for (std::size_t j = 0; j < hd.F.size(); ++j) {
      Matrix prod = hd.F[i] * hd.F[j];
      if (i == j) prod -= hd.F[i];
      r.orthogonality_residual = std::max(r.orthogonality_residual, frobenius(prod));
    }
  return r;
}

}  // namespace qexcess
