#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qexcess {

enum class ErrorKind {
  NonRectangular,
  ZeroRow,
  RadiusViolation,
  DuplicatePoint,
  AmbiguousClustering,
  UnknownValue,
  DegenerateMeasure,
  NonPositiveNormalization,
  NotATwoDesign,
  RankAmbiguity,
  InconsistentInputs,
  HypothesisViolated,
  NotAPartition,
  EigenspaceAmbiguity,
  RankDeficient,
  InvalidGraph,
  Disconnected,
  NotRegular,
  InvalidTolerance,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qexcess
