#include "qexcess/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include "qexcess/error.hpp"

namespace qexcess {

namespace {

using SparseCounts = std::vector<std::pair<int, long>>;

SchemeVerdict refute(SchemeRefutation r) {
  SchemeVerdict v;
  v.refutation = std::move(r);
  return v;
}

}  // namespace

SchemeVerdict verify_scheme(const IndexMatrix& classes) {
  const int n = static_cast<int>(classes.rows());
  if (n < 1 || classes.cols() != n) throw Error(ErrorKind::NotAPartition, "class matrix must be square and nonempty");
  if (classes.minCoeff() < 0) throw Error(ErrorKind::NotAPartition, "class indices must be nonnegative");
  const int d = classes.maxCoeff();
  std::vector<long> sizes(d + 1, 0);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) ++sizes[classes(x, y)];
  for (int i = 0; i <= d; ++i)
    if (sizes[i] == 0) throw Error(ErrorKind::NotAPartition, "class " + std::to_string(i) + " is empty");

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if ((x == y) != (classes(x, y) == 0)) {
        SchemeRefutation r;
        r.axiom = SchemeRefutation::Axiom::DiagonalRelation;
        r.first = {x, y};
        r.k = classes(x, y);
        std::ostringstream os;
        os << "pair (" << x << "," << y << ") has class " << classes(x, y) << "; class 0 must be the diagonal";
        r.description = os.str();
        return refute(std::move(r));
      }
      if (classes(x, y) != classes(y, x)) {
        SchemeRefutation r;
        r.axiom = SchemeRefutation::Axiom::Symmetry;
        r.first = {x, y};
        r.second = {y, x};
        r.k = classes(x, y);
        std::ostringstream os;
        os << "pair (" << x << "," << y << ") has class " << classes(x, y) << " but (" << y << "," << x
           << ") has class " << classes(y, x);
        r.description = os.str();
        return refute(std::move(r));
      }
    }

  // For each pair (x, y), count z by (class(x,z), class(z,y)) and compare
  // with the first pair seen in the same class.
  const int w = d + 1;
  std::vector<SparseCounts> reference(w);
  std::vector<Pair> reference_pair(w);
  std::vector<bool> seen(w, false);
  std::vector<long> table(static_cast<std::size_t>(w) * w, 0);
  std::vector<int> touched;
  SparseCounts current;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      touched.clear();
      for (int z = 0; z < n; ++z) {
        const int idx = classes(x, z) * w + classes(z, y);
        if (table[idx]++ == 0) touched.push_back(idx);
      }
      std::sort(touched.begin(), touched.end());
      current.clear();
      for (int idx : touched) {
        current.emplace_back(idx, table[idx]);
        table[idx] = 0;
      }
      const int k = classes(x, y);
      if (!seen[k]) {
        seen[k] = true;
        reference[k] = current;
        reference_pair[k] = {x, y};
        continue;
      }
      if (current == reference[k]) continue;

      // Locate the first (i, j) on which the two count tables differ.
      auto count_in = [](const SparseCounts& c, int idx) {
        auto it = std::lower_bound(c.begin(), c.end(), std::make_pair(idx, 0L),
                                   [](const auto& a, const auto& b) { return a.first < b.first; });
        return it != c.end() && it->first == idx ? it->second : 0L;
      };
      int bad = -1;
      for (int idx = 0; idx < w * w && bad < 0; ++idx)
        if (count_in(current, idx) != count_in(reference[k], idx)) bad = idx;
      SchemeRefutation r;
      r.axiom = SchemeRefutation::Axiom::IntersectionNumbers;
      r.k = k;
      r.i = bad / w;
      r.j = bad % w;
      r.first = reference_pair[k];
      r.second = {x, y};
      r.first_count = count_in(reference[k], bad);
      r.second_count = count_in(current, bad);
      std::ostringstream os;
      os << "p^" << k << "_{" << r.i << "," << r.j << "} is " << r.first_count << " at (" << r.first.x << ","
         << r.first.y << ") but " << r.second_count << " at (" << x << "," << y << ")";
      r.description = os.str();
      return refute(std::move(r));
    }

  AssociationScheme sch;
  sch.n = n;
  sch.d = d;
  sch.classes = classes;
  sch.intersection.assign(static_cast<std::size_t>(w) * w * w, 0);
  for (int k = 0; k <= d; ++k)
    for (const auto& [idx, count] : reference[k]) sch.intersection[static_cast<std::size_t>(k) * w * w + idx] = count;
  sch.valencies.resize(w);
  for (int i = 0; i <= d; ++i) sch.valencies[i] = sch.p(0, i, i);
  SchemeVerdict v;
  v.scheme = std::move(sch);
  return v;
}

namespace {

// Orthonormal bases of the common eigenspaces of the relation matrices.
std::vector<Matrix> common_eigenspaces(const std::vector<Matrix>& A, const ToleranceConfig& cfg) {
  const Eigen::Index n = A.front().rows();
  std::mt19937_64 rng(0x5eedULL);
  std::normal_distribution<double> normal(0.0, 1.0);
  double scale = 0.0;
  for (const auto& a : A) scale = std::max(scale, a.norm());
  const double split_tol = std::sqrt(cfg.cert_tol) * scale;

  auto is_common = [&](const Matrix& U) {
    for (const auto& a : A) {
      const Matrix AU = a * U;
      const Matrix block = U.transpose() * AU;
      const double lambda = block.trace() / static_cast<double>(U.cols());
      if ((AU - lambda * U).norm() > split_tol) return false;
    }
    return true;
  };

  std::vector<Matrix> pending{Matrix::Identity(n, n)};
  std::vector<Matrix> done;
  for (int round = 0; round < 8 && !pending.empty(); ++round) {
    std::vector<Matrix> next;
    for (const auto& U : pending) {
      Matrix M = Matrix::Zero(n, n);
      for (const auto& a : A) M += normal(rng) * a;
      const Matrix restricted = U.transpose() * M * U;
      Eigen::SelfAdjointEigenSolver<Matrix> eig(restricted);
      const auto& vals = eig.eigenvalues();
      Eigen::Index begin = 0;
      while (begin < vals.size()) {
        Eigen::Index end = begin + 1;
        while (end < vals.size() && vals(end) - vals(end - 1) <= split_tol) ++end;
        const Matrix piece = U * eig.eigenvectors().middleCols(begin, end - begin);
        (is_common(piece) ? done : next).push_back(piece);
        begin = end;
      }
    }
    pending = std::move(next);
  }
  if (!pending.empty())
    throw Error(ErrorKind::EigenspaceAmbiguity, "relation matrices do not share resolvable eigenspaces");
  return done;
}

}  // namespace

EigenStructure eigen_structure(const AssociationScheme& sch, const ToleranceConfig& cfg) {
  const int n = sch.n;
  const int w = sch.d + 1;
  std::vector<Matrix> A;
  for (int i = 0; i < w; ++i) A.push_back(sch.relation(i));

  auto spaces = common_eigenspaces(A, cfg);
  const double tol = std::sqrt(cfg.cert_tol);

  // Eigenvalue rows; pieces with identical rows belong to one idempotent.
  struct Piece {
    Matrix U;
    std::vector<double> eig;
  };
  std::vector<Piece> pieces;
  for (auto& U : spaces) {
    std::vector<double> row(w);
    for (int i = 0; i < w; ++i) row[i] = (U.transpose() * A[i] * U).trace() / static_cast<double>(U.cols());
    bool merged = false;
    for (auto& p : pieces) {
      bool same = true;
      for (int i = 0; i < w && same; ++i) same = std::abs(p.eig[i] - row[i]) <= tol * std::max(1.0, std::abs(row[i]));
      if (same) {
        Matrix joined(n, p.U.cols() + U.cols());
        joined << p.U, U;
        p.U = std::move(joined);
        merged = true;
        break;
      }
    }
    if (!merged) pieces.push_back({std::move(U), std::move(row)});
  }
  if (static_cast<int>(pieces.size()) != w) {
    std::ostringstream os;
    os << "found " << pieces.size() << " common eigenspaces for " << w << " relations";
    throw Error(ErrorKind::EigenspaceAmbiguity, os.str());
  }

  // E_0 carries the all-ones vector; the rest descend lexicographically in
  // their eigenvalue rows.
  const Vector ones = Vector::Ones(n) / std::sqrt(static_cast<double>(n));
  auto holds_ones = [&](const Piece& p) { return (p.U.transpose() * ones).norm() > 0.5; };
  std::stable_sort(pieces.begin(), pieces.end(), [&](const Piece& a, const Piece& b) {
    const bool oa = holds_ones(a), ob = holds_ones(b);
    if (oa != ob) return oa;
    for (int i = 1; i < w; ++i)
      if (std::abs(a.eig[i] - b.eig[i]) > tol * std::max(1.0, std::abs(a.eig[i]))) return a.eig[i] > b.eig[i];
    return false;
  });

  EigenStructure es;
  es.n = n;
  es.valencies = sch.valencies;
  es.P = Matrix(w, w);
  es.Q = Matrix(w, w);
  for (int j = 0; j < w; ++j) {
    es.idempotents.push_back(pieces[j].U * pieces[j].U.transpose());
    es.ranks.push_back(static_cast<int>(pieces[j].U.cols()));
    for (int i = 0; i < w; ++i) es.P(j, i) = pieces[j].eig[i];
  }
  for (int i = 0; i < w; ++i)
    for (int j = 0; j < w; ++j)
      es.Q(j, i) = matrix_inner(es.idempotents[i], A[j]) / static_cast<double>(sch.valencies[j]);

  es.pq_residual = frobenius(es.P * es.Q - static_cast<double>(n) * Matrix::Identity(w, w));
  Matrix total = Matrix::Zero(n, n);
  for (int i = 0; i < w; ++i) {
    total += es.idempotents[i];
    for (int j = 0; j < w; ++j) {
      Matrix prod = es.idempotents[i] * es.idempotents[j];
      if (i == j) prod -= es.idempotents[i];
      es.idempotent_residual = std::max(es.idempotent_residual, frobenius(prod));
    }
    Matrix rebuilt = Matrix::Zero(n, n);
    for (int j = 0; j < w; ++j) rebuilt += es.P(j, i) * es.idempotents[j];
    es.reconstruction_residual = std::max(es.reconstruction_residual, frobenius(A[i] - rebuilt));
  }
  es.idempotent_residual = std::max(es.idempotent_residual, frobenius(total - Matrix::Identity(n, n)));

  es.krein.assign(static_cast<std::size_t>(w) * w * w, 0.0);
  for (int i = 0; i < w; ++i)
    for (int j = 0; j < w; ++j) {
      const Matrix had = es.idempotents[i].cwiseProduct(es.idempotents[j]);
      Matrix rebuilt = Matrix::Zero(n, n);
      for (int k = 0; k < w; ++k) {
        const double q = n * matrix_inner(had, es.idempotents[k]) / es.ranks[k];
        es.krein[(static_cast<std::size_t>(k) * w + i) * w + j] = q;
        rebuilt += (q / n) * es.idempotents[k];
      }
      es.krein_residual = std::max(es.krein_residual, frobenius(had - rebuilt));
    }
  return es;
}

namespace {

// Weighted least-squares fit of a degree-`degree` polynomial through
// (points[j], targets[j]) with weights[j].
Polynomial fit(const std::vector<double>& points, const std::vector<double>& targets,
               const std::vector<double>& weights, int degree) {
  const int rows = static_cast<int>(points.size());
  Matrix V(rows, degree + 1);
  Vector b(rows);
  for (int j = 0; j < rows; ++j) {
    const double sw = std::sqrt(weights[j]);
    double power = 1.0;
    for (int k = 0; k <= degree; ++k) {
      V(j, k) = sw * power;
      power *= points[j];
    }
    b(j) = sw * targets[j];
  }
  const Vector c = V.colPivHouseholderQr().solve(b);
  return Polynomial(std::vector<double>(c.data(), c.data() + c.size()));
}

}  // namespace

std::optional<QPolyOrdering> qpoly_ordering(const EigenStructure& es, const AssociationScheme& sch, int e1,
                                            const ToleranceConfig& cfg) {
  const int w = es.d() + 1;
  if (e1 < 0 || e1 >= w) throw Error(ErrorKind::InvalidInput, "idempotent index out of range");
  if (e1 == 0 || w < 2) return std::nullopt;

  // B = n E_{e1} takes the value Q(j, e1) on relation j. B∘k = sum_j beta_j^k A_j
  // expands in idempotents through P.
  std::vector<double> beta(w), weight(w);
  for (int j = 0; j < w; ++j) {
    beta[j] = es.Q(j, e1);
    weight[j] = static_cast<double>(es.valencies[j]);
  }

  QPolyOrdering ord;
  ord.order = {0, e1};
  std::vector<bool> used(w, false);
  used[0] = used[e1] = true;
  for (int k = 2; k < w; ++k) {
    Vector coeff = Vector::Zero(w);
    double norm2 = 0.0;
    for (int j = 0; j < w; ++j) {
      const double bk = std::pow(beta[j], k);
      norm2 += weight[j] * static_cast<double>(sch.n) * bk * bk;
      for (int i = 0; i < w; ++i) coeff(i) += bk * es.P(i, j);
    }
    const double threshold = cfg.cert_tol * std::sqrt(norm2);
    int fresh = -1;
    for (int i = 0; i < w; ++i) {
      if (used[i] || std::abs(coeff(i)) * std::sqrt(static_cast<double>(es.ranks[i])) <= threshold) continue;
      if (fresh >= 0) return std::nullopt;  // two new idempotents at one degree
      fresh = i;
    }
    if (fresh < 0) return std::nullopt;
    used[fresh] = true;
    ord.order.push_back(fresh);
  }

  const Matrix B = es.idempotents[e1] * static_cast<double>(es.n);
  for (int i = 0; i < w; ++i) {
    std::vector<double> target(w);
    for (int j = 0; j < w; ++j) target[j] = es.Q(j, ord.order[i]);
    Polynomial v = fit(beta, target, weight, i);
    const double residual = frobenius(entrywise_poly(B, v) - es.idempotents[ord.order[i]] * static_cast<double>(es.n));
    ord.reconstruction_residual = std::max(ord.reconstruction_residual, residual / es.n);
    ord.v.push_back(std::move(v));
  }
  if (ord.reconstruction_residual > cfg.cert_tol) return std::nullopt;
  return ord;
}

PointSet spherical_embedding(const AssociationScheme& sch, const EigenStructure& es, int e1,
                             const ToleranceConfig& cfg) {
  const int w = es.d() + 1;
  if (e1 < 0 || e1 >= w) throw Error(ErrorKind::RankDeficient, "idempotent index out of range");
  if (sch.n != es.n) throw Error(ErrorKind::InconsistentInputs, "scheme and eigenstructure sizes differ");
  const int m = es.ranks[e1];
  if (m < 1) throw Error(ErrorKind::RankDeficient, "idempotent has rank 0");
  Eigen::SelfAdjointEigenSolver<Matrix> eig(es.idempotents[e1]);
  const Matrix U = eig.eigenvectors().rightCols(m);
  const Matrix V = U * std::sqrt(static_cast<double>(es.n));
  return load_pointset(V, cfg, false);
}

std::optional<std::vector<int>> match_idempotents(const EigenStructure& es, const std::vector<Matrix>& F,
                                                  double tol) {
  if (F.size() != es.idempotents.size()) return std::nullopt;
  std::vector<int> partner(F.size(), -1);
  std::vector<bool> taken(F.size(), false);
  for (std::size_t i = 0; i < F.size(); ++i) {
    for (std::size_t j = 0; j < F.size(); ++j) {
      if (taken[j] || F[i].rows() != es.n) continue;
      if (frobenius(F[i] - es.idempotents[j]) <= tol) {
        partner[i] = static_cast<int>(j);
        taken[j] = true;
        break;
      }
    }
    if (partner[i] < 0) return std::nullopt;
  }
  return partner;
}

}  // namespace qexcess
