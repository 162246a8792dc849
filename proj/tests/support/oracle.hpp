#pragma once

// Reference implementations used only by tests. Each one takes a different
// route from the library: first-come grouping instead of single linkage,
// Hankel moment systems instead of Gram-Schmidt, pseudo-inverse projectors
// instead of layered SVD, and triple loops instead of sparse count tables.

#include <algorithm>
#include <cmath>
#include <optional>
#include <queue>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Matrix = Eigen::MatrixXd;
using IndexMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;

struct Profile {
  std::vector<double> values;
  std::vector<long> counts;
  IndexMatrix class_of;
};

inline Profile brute_profile(const Matrix& X, double tol) {
  const Matrix gram = X * X.transpose();
  const int n = static_cast<int>(X.rows());
  std::vector<double> reps;
  std::vector<std::vector<std::pair<int, int>>> members;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      std::size_t c = 0;
      while (c < reps.size() && std::abs(reps[c] - gram(x, y)) > tol) ++c;
      if (c == reps.size()) {
        reps.push_back(gram(x, y));
        members.emplace_back();
      }
      members[c].emplace_back(x, y);
    }
  std::vector<std::size_t> order(reps.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return reps[a] > reps[b]; });
  Profile p;
  p.class_of = IndexMatrix::Zero(n, n);
  for (std::size_t r = 0; r < order.size(); ++r) {
    p.values.push_back(reps[order[r]]);
    p.counts.push_back(static_cast<long>(members[order[r]].size()));
    for (auto [x, y] : members[order[r]]) p.class_of(x, y) = static_cast<int>(r);
  }
  return p;
}

inline double eval(const std::vector<double>& c, double t) {
  double v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * t + *it;
  return v;
}

inline double measure_inner(const std::vector<double>& a, const std::vector<double>& b,
                            const std::vector<double>& pts, const std::vector<double>& w) {
  double s = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) s += w[i] * eval(a, pts[i]) * eval(b, pts[i]);
  return s;
}

/// Orthogonal polynomials for the measure sum w_i delta_{pts_i}, normalized
/// so that <p_k,p_k> = p_k(anchor). The monic p_k solves the Hankel system
/// sum_j c_j mu_{i+j} = -mu_{i+k} for i < k.
inline std::vector<std::vector<double>> moment_polynomials(const std::vector<double>& pts,
                                                           const std::vector<double>& w, double anchor) {
  const int s = static_cast<int>(pts.size()) - 1;
  std::vector<double> mu(2 * s + 1, 0.0);
  for (int r = 0; r <= 2 * s; ++r)
    for (std::size_t i = 0; i < pts.size(); ++i) mu[r] += w[i] * std::pow(pts[i], r);
  std::vector<std::vector<double>> out;
  for (int k = 0; k <= s; ++k) {
    std::vector<double> c(k + 1, 0.0);
    c[k] = 1.0;
    if (k > 0) {
      Matrix H(k, k);
      Eigen::VectorXd rhs(k);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) H(i, j) = mu[i + j];
        rhs(i) = -mu[i + k];
      }
      const Eigen::VectorXd sol = H.fullPivLu().solve(rhs);
      for (int j = 0; j < k; ++j) c[j] = sol(j);
    }
    const double scale = eval(c, anchor) / measure_inner(c, c, pts, w);
    for (double& v : c) v *= scale;
    out.push_back(std::move(c));
  }
  return out;
}

/// Hadamard power blocks (nG)^{o j}, j = 0..k.
inline Matrix hadamard_power(const Matrix& nG, int j) {
  Matrix out = Matrix::Ones(nG.rows(), nG.cols());
  for (int r = 0; r < j; ++r) out = out.cwiseProduct(nG);
  return out;
}

/// F_k = P_k - P_{k-1} with P_k = B B^+ for B = [(nG)^{o0} ... (nG)^{ok}].
inline std::vector<Matrix> projector_chain(const Matrix& nG, double threshold = 1e-9) {
  const Eigen::Index n = nG.rows();
  std::vector<Matrix> F;
  Matrix prev = Matrix::Zero(n, n);
  Matrix B(n, 0);
  for (int k = 0; k < n; ++k) {
    Matrix next(n, B.cols() + n);
    next << B, hadamard_power(nG, k);
    B = next;
    Eigen::CompleteOrthogonalDecomposition<Matrix> cod;
    cod.setThreshold(threshold);
    cod.compute(B);
    const Matrix P = B * cod.pseudoInverse();
    F.push_back(P - prev);
    prev = P;
    if (cod.rank() == n) break;
  }
  return F;
}

/// p[k][i][j] by direct triple loops, or nullopt if some count varies.
inline std::optional<std::vector<std::vector<std::vector<long>>>> intersection_numbers(const IndexMatrix& c) {
  const int n = static_cast<int>(c.rows());
  const int w = c.maxCoeff() + 1;
  std::vector<std::vector<std::vector<long>>> p(w, std::vector<std::vector<long>>(w, std::vector<long>(w, -1)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (c(x, y) != c(y, x)) return std::nullopt;
      for (int i = 0; i < w; ++i)
        for (int j = 0; j < w; ++j) {
          long count = 0;
          for (int z = 0; z < n; ++z) count += (c(x, z) == i && c(z, y) == j);
          long& slot = p[c(x, y)][i][j];
          if (slot < 0) slot = count;
          else if (slot != count) return std::nullopt;
        }
    }
  return p;
}

inline IndexMatrix bfs_distances(const IndexMatrix& adj) {
  const int n = static_cast<int>(adj.rows());
  IndexMatrix d = IndexMatrix::Constant(n, n, -1);
  for (int s = 0; s < n; ++s) {
    std::queue<int> q;
    q.push(s);
    d(s, s) = 0;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v = 0; v < n; ++v)
        if (adj(u, v) && d(s, v) < 0) {
          d(s, v) = d(s, u) + 1;
          q.push(v);
        }
    }
  }
  return d;
}

/// Distance-regularity via constancy of b_i and c_i over all pairs.
inline bool distance_regular(const IndexMatrix& adj) {
  const IndexMatrix d = bfs_distances(adj);
  const int n = static_cast<int>(adj.rows());
  if ((d.array() < 0).any()) return false;
  const int D = d.maxCoeff();
  std::vector<int> b(D + 1, -1), c(D + 1, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int i = d(x, y);
      int up = 0, down = 0;
      for (int z = 0; z < n; ++z) {
        if (!adj(y, z)) continue;
        if (d(x, z) == i + 1) ++up;
        if (d(x, z) == i - 1) ++down;
      }
      if (b[i] < 0) b[i] = up;
      else if (b[i] != up) return false;
      if (c[i] < 0) c[i] = down;
      else if (c[i] != down) return false;
    }
  return true;
}

}  // namespace oracle
