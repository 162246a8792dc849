#include "qexcess/graphdual.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>

#include "qexcess/error.hpp"

namespace qexcess {

Graph::Graph(IndexMatrix adjacency) : adj_(std::move(adjacency)) {
  const int n = static_cast<int>(adj_.rows());
  nbrs_.assign(n, {});
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (adj_(x, y)) nbrs_[x].push_back(y);
  const std::size_t deg = nbrs_.front().size();
  if (std::all_of(nbrs_.begin(), nbrs_.end(), [deg](const auto& v) { return v.size() == deg; }))
    degree_ = static_cast<int>(deg);
  std::vector<bool> seen(n, false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : nbrs_[x])
      if (!seen[y]) {
        seen[y] = true;
        ++reached;
        stack.push_back(y);
      }
  }
  connected_ = reached == n;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 1) throw Error(ErrorKind::InvalidGraph, "graph needs at least one vertex");
  IndexMatrix adj = IndexMatrix::Zero(n, n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      std::ostringstream os;
      os << "edge (" << u << "," << v << ") has an endpoint outside 0.." << n - 1;
      throw Error(ErrorKind::InvalidGraph, os.str());
    }
    if (u == v) throw Error(ErrorKind::InvalidGraph, "loop at vertex " + std::to_string(u));
    if (adj(u, v)) {
      std::ostringstream os;
      os << "edge (" << u << "," << v << ") listed twice";
      throw Error(ErrorKind::InvalidGraph, os.str());
    }
    adj(u, v) = adj(v, u) = 1;
  }
  return Graph(std::move(adj));
}

Graph Graph::from_adjacency(const IndexMatrix& adjacency) {
  const auto n = adjacency.rows();
  if (n < 1 || adjacency.cols() != n) throw Error(ErrorKind::InvalidGraph, "adjacency matrix must be square");
  for (Eigen::Index x = 0; x < n; ++x) {
    if (adjacency(x, x) != 0) throw Error(ErrorKind::InvalidGraph, "adjacency diagonal must be zero");
    for (Eigen::Index y = 0; y < n; ++y) {
      const int a = adjacency(x, y);
      if ((a != 0 && a != 1) || a != adjacency(y, x))
        throw Error(ErrorKind::InvalidGraph, "adjacency must be a symmetric 0/1 matrix");
    }
  }
  return Graph(adjacency);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n(); ++x)
    for (int y : nbrs_[x])
      if (x < y) out.emplace_back(x, y);
  return out;
}

IndexMatrix distance_matrix(const Graph& g) {
  const int n = g.n();
  IndexMatrix dist = IndexMatrix::Constant(n, n, -1);
  std::vector<int> queue(n);
  for (int src = 0; src < n; ++src) {
    int head = 0, tail = 0;
    queue[tail++] = src;
    dist(src, src) = 0;
    while (head < tail) {
      const int x = queue[head++];
      for (int y : g.neighbors()[x])
        if (dist(src, y) < 0) {
          dist(src, y) = dist(src, x) + 1;
          queue[tail++] = y;
        }
    }
  }
  return dist;
}

IndexMatrix distance_partition(const Graph& g) {
  if (!g.connected()) throw Error(ErrorKind::Disconnected, "distance partition needs a connected graph");
  return distance_matrix(g);
}

Spectrum graph_spectrum(const Graph& g, const ToleranceConfig& cfg) {
  cfg.validate();
  if (!g.connected()) throw Error(ErrorKind::Disconnected, "graph is not connected");
  Eigen::SelfAdjointEigenSolver<Matrix> eig(g.adjacency_matrix(), Eigen::EigenvaluesOnly);
  const Vector& vals = eig.eigenvalues();
  double scale = 1.0;
  for (const auto& nb : g.neighbors()) scale = std::max(scale, static_cast<double>(nb.size()));
  const double tol = cfg.cluster_tolerance(scale);

  Spectrum spec;
  spec.regular_degree = g.regular_degree();
  // Descending order, single-linkage clusters.
  Eigen::Index i = vals.size() - 1;
  while (i >= 0) {
    Eigen::Index j = i;
    double sum = vals(i);
    while (j - 1 >= 0 && vals(j) - vals(j - 1) <= tol) sum += vals(--j);
    const int mult = static_cast<int>(i - j + 1);
    spec.eigenvalues.push_back(sum / mult);
    spec.multiplicities.push_back(mult);
    i = j - 1;
  }
  return spec;
}

DiscreteMeasure spectral_measure(const Spectrum& spec, int n) {
  DiscreteMeasure mu;
  mu.points = spec.eigenvalues;
  for (int m : spec.multiplicities) mu.weights.push_back(static_cast<double>(m) / n);
  return mu;
}

PredegreeSequence predistance_sequence(const Spectrum& spec, int n, const ToleranceConfig& cfg) {
  if (!spec.regular_degree) throw Error(ErrorKind::NotRegular, "graph is not regular");
  const double k = *spec.regular_degree;
  if (std::abs(spec.eigenvalues.front() - k) > cfg.cluster_tolerance(k) || spec.multiplicities.front() != 1)
    throw Error(ErrorKind::NotRegular, "largest eigenvalue is not the degree with multiplicity 1");
  return orthogonal_sequence(spectral_measure(spec, n), spec.eigenvalues.front(), cfg);
}

SpectralExcessReport spectral_excess_report(const Graph& g, const ToleranceConfig& cfg) {
  if (!g.connected()) throw Error(ErrorKind::Disconnected, "graph is not connected");
  if (!g.regular_degree()) throw Error(ErrorKind::NotRegular, "graph is not regular");
  const int n = g.n();
  SpectralExcessReport r;
  r.spectrum = graph_spectrum(g, cfg);
  r.predistance = predistance_sequence(r.spectrum, n, cfg);
  r.d = r.spectrum.d();
  const IndexMatrix dist = distance_matrix(g);
  r.D = dist.maxCoeff();
  r.hypothesis_met = r.D == r.d;

  r.excess.assign(n, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (dist(x, y) == r.d) ++r.excess[x];
  double total = 0.0;
  for (int e : r.excess) total += e;
  r.mean_excess = total / n;
  r.bound = r.predistance.values_at_anchor.back();
  r.gap = r.bound - r.mean_excess;
  r.equality = std::abs(r.gap) <= cfg.cert_tol * r.bound;
  for (double v : r.predistance.values_at_anchor) r.predistance_sum += v;

  // A_i = p_i(A): p_i(A) must round to an integer matrix, which must then be
  // exactly the distance-i matrix.
  const Matrix A = g.adjacency_matrix();
  bool all_match = r.hypothesis_met;
  for (int i = 0; i <= r.d; ++i) {
    const Matrix pa = matrix_poly(A, r.predistance.q[i]);
    const Matrix rounded = pa.array().round().matrix();
    r.polynomial_residual = std::max(r.polynomial_residual, (pa - rounded).cwiseAbs().maxCoeff());
    const double scale = std::max(1.0, pa.cwiseAbs().maxCoeff());
    if ((pa - rounded).cwiseAbs().maxCoeff() > cfg.cert_tol * scale) {
      all_match = false;
      continue;
    }
    for (int x = 0; x < n && all_match; ++x)
      for (int y = 0; y < n && all_match; ++y)
        if (static_cast<int>(rounded(x, y)) != (dist(x, y) == i ? 1 : 0)) all_match = false;
  }
  r.drg = all_match;
  return r;
}

}  // namespace qexcess
