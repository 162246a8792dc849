#include "qexcess/tolerance.hpp"

#include <cmath>

#include "qexcess/error.hpp"

namespace qexcess {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NonRectangular: return "NonRectangular";
    case ErrorKind::ZeroRow: return "ZeroRow";
    case ErrorKind::RadiusViolation: return "RadiusViolation";
    case ErrorKind::DuplicatePoint: return "DuplicatePoint";
    case ErrorKind::AmbiguousClustering: return "AmbiguousClustering";
    case ErrorKind::UnknownValue: return "UnknownValue";
    case ErrorKind::DegenerateMeasure: return "DegenerateMeasure";
    case ErrorKind::NonPositiveNormalization: return "NonPositiveNormalization";
    case ErrorKind::NotATwoDesign: return "NotATwoDesign";
    case ErrorKind::RankAmbiguity: return "RankAmbiguity";
    case ErrorKind::InconsistentInputs: return "InconsistentInputs";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::NotAPartition: return "NotAPartition";
    case ErrorKind::EigenspaceAmbiguity: return "EigenspaceAmbiguity";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::InvalidTolerance: return "InvalidTolerance";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

double ToleranceConfig::cluster_tolerance(double scale) const {
  if (cluster_tol) return *cluster_tol;
  return 1e-8 * std::max(1.0, std::abs(scale));
}

void ToleranceConfig::validate() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (cluster_tol && !positive(*cluster_tol))
    throw Error(ErrorKind::InvalidTolerance, "cluster_tol must be strictly positive");
  if (!positive(rank_tol)) throw Error(ErrorKind::InvalidTolerance, "rank_tol must be strictly positive");
  if (!positive(cert_tol)) throw Error(ErrorKind::InvalidTolerance, "cert_tol must be strictly positive");
}

}  // namespace qexcess
