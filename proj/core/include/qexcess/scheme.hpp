#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qexcess/linalg.hpp"
#include "qexcess/pointset.hpp"
#include "qexcess/polynomial.hpp"
#include "qexcess/tolerance.hpp"

namespace qexcess {

/// Symmetric association scheme on n points with d classes.
struct AssociationScheme {
  int n = 0;
  int d = 0;
  IndexMatrix classes;             // n x n, class 0 is the diagonal
  std::vector<long> valencies;     // k_i = p^0_{ii}
  std::vector<long> intersection;  // p^k_{ij} at (k * (d+1) + i) * (d+1) + j

  long p(int k, int i, int j) const { return intersection[(static_cast<std::size_t>(k) * (d + 1) + i) * (d + 1) + j]; }
  Matrix relation(int i) const { return (classes.array() == i).cast<double>().matrix(); }
};

struct Pair {
  int x = 0;
  int y = 0;
};

/// A failed axiom with the pairs that witness it.
struct SchemeRefutation {
  enum class Axiom { DiagonalRelation, Symmetry, IntersectionNumbers };
  Axiom axiom = Axiom::IntersectionNumbers;
  int i = 0, j = 0, k = 0;  // for IntersectionNumbers: p^k_{ij} is not constant
  Pair first, second;       // two pairs in R_k with different counts
  long first_count = 0, second_count = 0;
  std::string description;
};

struct SchemeVerdict {
  std::optional<AssociationScheme> scheme;
  std::optional<SchemeRefutation> refutation;

  bool verified() const { return scheme.has_value(); }
};

/// Exact integer check of the axioms on an n x n class-index matrix.
/// Throws NotAPartition if the matrix is not square, uses negative indices,
/// or skips a class index.
SchemeVerdict verify_scheme(const IndexMatrix& classes);

/// Primitive idempotents and eigenmatrices of a verified scheme.
/// P(j, i) = P_i(j), the eigenvalue of A_i on E_j.
/// Q(j, i) = Q_i(j), so that E_i = (1/n) sum_j Q(j, i) A_j.
struct EigenStructure {
  int n = 0;
  std::vector<Matrix> idempotents;  // E_0 = J/n first
  std::vector<int> ranks;
  Matrix P;
  Matrix Q;
  std::vector<double> krein;  // q^k_{ij} laid out like AssociationScheme::intersection
  std::vector<long> valencies;
  double pq_residual = 0.0;            // ||PQ - nI||
  double idempotent_residual = 0.0;    // max ||E_i E_j - delta E_i||, ||sum E - I||
  double reconstruction_residual = 0.0;  // max ||A_i - sum_j P_i(j) E_j||
  double krein_residual = 0.0;         // max ||E_i∘E_j - (1/n) sum_k q^k_ij E_k||

  int d() const { return static_cast<int>(idempotents.size()) - 1; }
  double krein_parameter(int k, int i, int j) const {
    return krein[(static_cast<std::size_t>(k) * (d() + 1) + i) * (d() + 1) + j];
  }
};

/// Simultaneous diagonalization of {A_i}. Throws EigenspaceAmbiguity when the
/// common eigenspaces cannot be separated into exactly d+1 pieces.
EigenStructure eigen_structure(const AssociationScheme& sch, const ToleranceConfig& cfg);

/// Chain E_0, E_{e1}, ... with n E_{order[i]} = v*_i((n E_{e1})∘).
struct QPolyOrdering {
  std::vector<int> order;            // order[0] = 0, order[1] = e1
  std::vector<Polynomial> v;         // deg v[i] = i
  double reconstruction_residual = 0.0;
};

std::optional<QPolyOrdering> qpoly_ordering(const EigenStructure& es, const AssociationScheme& sch, int e1,
                                            const ToleranceConfig& cfg);

/// Rows of V with n E_{e1} = V Vᵀ, as a point set on the sphere of squared
/// radius rank(E_{e1}). The column basis is arbitrary; only V Vᵀ is canonical.
PointSet spherical_embedding(const AssociationScheme& sch, const EigenStructure& es, int e1,
                             const ToleranceConfig& cfg);

/// For each F_i, the index j with ||F_i - E_j||_F <= tol, if every F_i finds a
/// distinct partner and every E_j is used.
std::optional<std::vector<int>> match_idempotents(const EigenStructure& es, const std::vector<Matrix>& F,
                                                  double tol);

}  // namespace qexcess
