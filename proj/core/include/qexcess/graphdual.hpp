#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qexcess/linalg.hpp"
#include "qexcess/orthopoly.hpp"
#include "qexcess/tolerance.hpp"

namespace qexcess {

/// Simple undirected graph.
class Graph {
 public:
  /// Throws InvalidGraph on loops, out-of-range endpoints or n < 1.
  /// Repeated edges are rejected too.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);
  /// Throws InvalidGraph unless adjacency is symmetric 0/1 with zero diagonal.
  static Graph from_adjacency(const IndexMatrix& adjacency);

  int n() const { return static_cast<int>(adj_.rows()); }
  const IndexMatrix& adjacency() const { return adj_; }
  Matrix adjacency_matrix() const { return adj_.cast<double>(); }
  const std::vector<std::vector<int>>& neighbors() const { return nbrs_; }
  bool connected() const { return connected_; }
  /// Common degree when every vertex has the same degree.
  std::optional<int> regular_degree() const { return degree_; }
  std::vector<std::pair<int, int>> edges() const;

 private:
  explicit Graph(IndexMatrix adjacency);
  IndexMatrix adj_;
  std::vector<std::vector<int>> nbrs_;
  bool connected_ = false;
  std::optional<int> degree_;
};

/// All-pairs shortest-path distances by breadth-first search; -1 if unreachable.
IndexMatrix distance_matrix(const Graph& g);

/// Class-index partition by graph distance (the distance-i relations).
IndexMatrix distance_partition(const Graph& g);

struct Spectrum {
  std::vector<double> eigenvalues;  // theta_0 > theta_1 > ... > theta_d
  std::vector<int> multiplicities;
  std::optional<int> regular_degree;

  int d() const { return static_cast<int>(eigenvalues.size()) - 1; }
};

/// Throws Disconnected.
Spectrum graph_spectrum(const Graph& g, const ToleranceConfig& cfg);

/// (1/n) sum m_i delta_{theta_i}.
DiscreteMeasure spectral_measure(const Spectrum& spec, int n);

/// Predistance polynomials p_0..p_d, normalized by <p_i, p_i> = p_i(theta_0).
/// Throws NotRegular unless theta_0 is the degree with multiplicity 1.
PredegreeSequence predistance_sequence(const Spectrum& spec, int n, const ToleranceConfig& cfg);

struct SpectralExcessReport {
  int D = 0;  // diameter
  int d = 0;  // distinct eigenvalues - 1
  bool hypothesis_met = false;
  Spectrum spectrum;
  PredegreeSequence predistance;
  std::vector<int> excess;  // |Gamma_d(x)| per vertex
  double mean_excess = 0.0;
  double bound = 0.0;  // p_d(theta_0)
  double gap = 0.0;
  bool equality = false;  // |gap| <= cert_tol * bound
  bool drg = false;       // D = d and A_i = p_i(A) for all i
  double polynomial_residual = 0.0;  // max distance of p_i(A) from the nearest integer matrix
  double predistance_sum = 0.0;      // sum_i p_i(theta_0), equals n for regular graphs
};

/// Throws Disconnected or NotRegular.
SpectralExcessReport spectral_excess_report(const Graph& g, const ToleranceConfig& cfg);

/// Connected cubic graphs on n vertices, one per isomorphism class.
std::vector<Graph> connected_cubic_graphs(int n);

/// Exact isomorphism test by backtracking on distance profiles.
bool isomorphic(const Graph& a, const Graph& b);

}  // namespace qexcess
