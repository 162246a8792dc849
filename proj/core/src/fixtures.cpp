#include "qexcess/fixtures.hpp"

#include <cmath>

namespace qexcess::fixtures {

namespace {

Matrix rescale(Matrix pts) {
  const double radius = std::sqrt(static_cast<double>(pts.cols()));
  for (Eigen::Index x = 0; x < pts.rows(); ++x) pts.row(x) *= radius / pts.row(x).norm();
  return pts;
}

}  // namespace

Matrix simplex(int m) {
  // Helmert basis of the sum-zero hyperplane in R^{m+1}.
  Matrix basis = Matrix::Zero(m + 1, m);
  for (int k = 1; k <= m; ++k) {
    const double scale = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
    for (int i = 0; i < k; ++i) basis(i, k - 1) = scale;
    basis(k, k - 1) = -k * scale;
  }
  return rescale(basis);  // row i is e_i projected onto the hyperplane
}

Matrix cross_polytope(int m) {
  Matrix pts = Matrix::Zero(2 * m, m);
  const double r = std::sqrt(static_cast<double>(m));
  for (int i = 0; i < m; ++i) {
    pts(2 * i, i) = r;
    pts(2 * i + 1, i) = -r;
  }
  return pts;
}

Matrix hypercube(int m) {
  const int n = 1 << m;
  Matrix pts(n, m);
  for (int x = 0; x < n; ++x)
    for (int i = 0; i < m; ++i) pts(x, i) = (x >> (m - 1 - i)) & 1 ? -1.0 : 1.0;
  return pts;
}

Matrix cube() { return hypercube(3); }

Matrix octahedron() { return cross_polytope(3); }

Matrix icosahedron() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  Matrix pts(12, 3);
  int row = 0;
  for (double a : {1.0, -1.0})
    for (double b : {phi, -phi}) {
      pts.row(row++) << 0.0, a, b;
      pts.row(row++) << a, b, 0.0;
      pts.row(row++) << b, 0.0, a;
    }
  return rescale(pts);
}

Matrix cuboid() {
  const double a = std::sqrt(1.5) * 1.2;
  const double b = std::sqrt((3.0 - a * a) / 2.0);
  Matrix pts(8, 3);
  for (int x = 0; x < 8; ++x) {
    pts(x, 0) = (x & 4) ? -a : a;
    pts(x, 1) = (x & 2) ? -b : b;
    pts(x, 2) = (x & 1) ? -b : b;
  }
  return pts;
}

Matrix d_roots(int m) {
  std::vector<Vector> rows;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (double si : {1.0, -1.0})
        for (double sj : {1.0, -1.0}) {
          Vector v = Vector::Zero(m);
          v(i) = si;
          v(j) = sj;
          rows.push_back(v);
        }
  Matrix pts(static_cast<Eigen::Index>(rows.size()), m);
  for (std::size_t x = 0; x < rows.size(); ++x) pts.row(static_cast<Eigen::Index>(x)) = rows[x].transpose();
  return rescale(pts);
}

Graph petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    edges.emplace_back(i, 5 + i);
  }
  return Graph::from_edges(10, edges);
}

Graph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

Graph hypercube_graph(int m) {
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < (1 << m); ++x)
    for (int b = 0; b < m; ++b)
      if (!(x & (1 << b))) edges.emplace_back(x, x | (1 << b));
  return Graph::from_edges(1 << m, edges);
}

std::vector<NamedPointSet> design_fixtures() {
  std::vector<NamedPointSet> out;
  for (int m = 2; m <= 6; ++m) out.push_back({"simplex_m" + std::to_string(m), simplex(m)});
  for (int m = 2; m <= 6; ++m) out.push_back({"cross_polytope_m" + std::to_string(m), cross_polytope(m)});
  out.push_back({"cube", cube()});
  out.push_back({"icosahedron", icosahedron()});
  return out;
}

}  // namespace qexcess::fixtures
