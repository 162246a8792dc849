#include "qexcess/pointset.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qexcess/error.hpp"

namespace qexcess {

namespace {

void check_points(const PointSet& ps, const ToleranceConfig& cfg) {
  const int n = ps.n();
  const double m = ps.m();
  for (int x = 0; x < n; ++x) {
    const double r2 = ps.coords.row(x).squaredNorm();
    if (!std::isfinite(r2) || std::abs(r2 - m) > cfg.cert_tol * m) {
      std::ostringstream os;
      os << "row " << x << " has squared norm " << r2 << ", expected " << m;
      throw Error(ErrorKind::RadiusViolation, os.str());
    }
  }
  const double tol = cfg.cluster_tolerance(m);
  const Matrix gram = ps.coords * ps.coords.transpose();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (gram(x, y) >= m - tol) {
        std::ostringstream os;
        os << "rows " << x << " and " << y << " coincide";
        throw Error(ErrorKind::DuplicatePoint, os.str());
      }
}

}  // namespace

PointSet load_pointset(const CoordinateTable& raw, const ToleranceConfig& cfg, bool normalize) {
  if (raw.empty() || raw.front().empty())
    throw Error(ErrorKind::NonRectangular, "point table needs n >= 1 rows and m >= 1 columns");
  const std::size_t m = raw.front().size();
  Matrix coords(static_cast<Eigen::Index>(raw.size()), static_cast<Eigen::Index>(m));
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].size() != m) {
      std::ostringstream os;
      os << "row " << i << " has " << raw[i].size() << " entries, expected " << m;
      throw Error(ErrorKind::NonRectangular, os.str());
    }
    for (std::size_t j = 0; j < m; ++j) coords(i, j) = raw[i][j];
  }
  return load_pointset(coords, cfg, normalize);
}

PointSet load_pointset(const Matrix& raw, const ToleranceConfig& cfg, bool normalize) {
  cfg.validate();
  if (raw.rows() < 1 || raw.cols() < 1)
    throw Error(ErrorKind::NonRectangular, "point table needs n >= 1 rows and m >= 1 columns");
  if (!raw.allFinite()) throw Error(ErrorKind::InvalidInput, "coordinates must be finite");
  PointSet ps{raw};
  if (normalize) {
    const double radius = std::sqrt(static_cast<double>(ps.m()));
    for (int x = 0; x < ps.n(); ++x) {
      const double norm = ps.coords.row(x).norm();
      if (norm == 0.0) {
        std::ostringstream os;
        os << "row " << x << " is the zero vector";
        throw Error(ErrorKind::ZeroRow, os.str());
      }
      ps.coords.row(x) *= radius / norm;
    }
  }
  check_points(ps, cfg);
  return ps;
}

InnerProductProfile inner_product_profile(const PointSet& ps, const ToleranceConfig& cfg) {
  const int n = ps.n();
  const double m = ps.m();
  const double tol = cfg.cluster_tolerance(m);
  const Matrix gram = ps.coords * ps.coords.transpose();

  // Upper-triangle products, each standing for two ordered pairs.
  struct Entry {
    double value;
    int x, y;
  };
  std::vector<Entry> entries;
  entries.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) entries.push_back({0.5 * (gram(x, y) + gram(y, x)), x, y});
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    return a.value > b.value;
  });

  InnerProductProfile prof;
  prof.cluster_tol = tol;
  prof.class_of = IndexMatrix::Zero(n, n);
  prof.values.push_back(m);
  prof.counts.push_back(n);
  prof.min_gap = std::numeric_limits<double>::infinity();

  std::size_t begin = 0;
  double previous_low = m;
  while (begin < entries.size()) {
    std::size_t end = begin + 1;
    while (end < entries.size() && entries[end - 1].value - entries[end].value <= tol) ++end;
    double sum = 0.0;
    for (std::size_t i = begin; i < end; ++i) sum += entries[i].value;
    const double high = entries[begin].value;
    const double low = entries[end - 1].value;
    const int index = static_cast<int>(prof.values.size());
    prof.values.push_back(sum / static_cast<double>(end - begin));
    prof.counts.push_back(2 * static_cast<long>(end - begin));
    for (std::size_t i = begin; i < end; ++i) {
      prof.class_of(entries[i].x, entries[i].y) = index;
      prof.class_of(entries[i].y, entries[i].x) = index;
    }
    prof.min_gap = std::min(prof.min_gap, previous_low - high);
    prof.max_spread = std::max(prof.max_spread, high - low);
    previous_low = low;
    begin = end;
  }

  if (prof.s() > 0 && prof.min_gap <= 2.0 * tol) {
    std::ostringstream os;
    os << "adjacent inner-product clusters are only " << prof.min_gap
       << " apart with cluster_tol " << tol;
    throw Error(ErrorKind::AmbiguousClustering, os.str());
  }
  if (prof.s() == 0) prof.min_gap = 0.0;
  return prof;
}

NormalizedGram normalized_gram(const PointSet& ps, const InnerProductProfile& prof) {
  const int n = ps.n();
  if (prof.n() != n) throw Error(ErrorKind::InconsistentInputs, "profile and point set sizes differ");
  NormalizedGram g{Matrix(n, n)};
  const double inv_n = 1.0 / n;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) g.G(x, y) = prof.values[prof.class_of(x, y)] * inv_n;
  return g;
}

Matrix relation_matrix(const InnerProductProfile& prof, int index) {
  if (index < 0 || index > prof.s())
    throw Error(ErrorKind::UnknownValue, "relation index " + std::to_string(index) + " out of range");
  return (prof.class_of.array() == index).cast<double>().matrix();
}

Matrix relation_matrix(const InnerProductProfile& prof, const PointSet& ps, double alpha) {
  if (prof.n() != ps.n()) throw Error(ErrorKind::InconsistentInputs, "profile and point set sizes differ");
  const double tol = prof.cluster_tol > 0.0 ? prof.cluster_tol : 1e-8 * std::max(1.0, prof.m());
  for (int i = 0; i <= prof.s(); ++i)
    if (std::abs(prof.values[i] - alpha) <= tol) return relation_matrix(prof, i);
  std::ostringstream os;
  os << "inner product " << alpha << " does not occur";
  throw Error(ErrorKind::UnknownValue, os.str());
}

int numerical_rank(const Matrix& m, double rank_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > rank_tol * sv(0)) ++rank;
  return rank;
}

TwoDesignCertificate check_two_design(const PointSet& ps, const ToleranceConfig& cfg) {
  const int n = ps.n();
  const Matrix G = ps.coords * ps.coords.transpose() / static_cast<double>(n);
  TwoDesignCertificate cert;
  // (GJ)_xy is the row sum of G, the same for every column y.
  cert.row_sum_residual = G.rowwise().sum().cwiseAbs().maxCoeff();
  cert.idempotency_residual = frobenius(G * G - G);
  cert.rank_of_G = numerical_rank(G, cfg.rank_tol);
  const double limit = cfg.cert_tol * n;
  cert.passed = cert.row_sum_residual <= limit && cert.idempotency_residual <= limit;
  return cert;
}

}  // namespace qexcess
