#include <random>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracle.hpp"
#include "pipeline.hpp"
#include "qexcess/fixtures.hpp"
#include "qexcess/graphdual.hpp"

using namespace qexcess;
using testing_support::run_design;

namespace {

std::vector<fixtures::NamedPointSet> all_designs() {
  auto v = fixtures::design_fixtures();
  v.push_back({"octahedron", fixtures::octahedron()});
  v.push_back({"d4_roots", fixtures::d_roots(4)});
  v.push_back({"d5_roots", fixtures::d_roots(5)});
  v.push_back({"hypercube4", fixtures::hypercube(4)});
  return v;
}

Polynomial random_poly(int degree, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> U(-2.0, 2.0);
  std::vector<double> c(degree + 1);
  for (double& x : c) x = U(rng);
  c.back() = c.back() >= 0 ? c.back() + 0.5 : c.back() - 0.5;
  return Polynomial(c);
}

Matrix permutation_matrix(const std::vector<int>& perm) {
  Matrix P = Matrix::Zero(perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) P(i, perm[i]) = 1.0;
  return P;
}

Graph circulant(int n, const std::vector<int>& jumps) {
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  for (int v = 0; v < n; ++v)
    for (int j : jumps) {
      const int w = (v + j) % n;
      if (v == w || used[v][w]) continue;
      used[v][w] = used[w][v] = true;
      edges.emplace_back(std::min(v, w), std::max(v, w));
    }
  return Graph::from_edges(n, edges);
}

}  // namespace

TEST(PolynomialProperty, ProductAndEntrywiseAgreeWithPointwiseEvaluation) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> U(-3.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial a = random_poly(trial % 5, rng), b = random_poly((trial / 5) % 4, rng);
    const double t = U(rng);
    EXPECT_NEAR((a * b)(t), a(t) * b(t), 1e-10 * (1 + std::abs(a(t) * b(t))));
    EXPECT_NEAR((a + b)(t), a(t) + b(t), 1e-12 * (1 + std::abs(a(t)) + std::abs(b(t))));
    const Matrix M = Matrix::Random(3, 3);
    const Matrix E = entrywise_poly(M, a);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) EXPECT_NEAR(E(i, j), a(M(i, j)), 1e-12 * (1 + std::abs(a(M(i, j)))));
  }
}

TEST(PointSetProperty, ProfileAndCertificateInvariantUnderRotationAndRelabeling) {
  std::mt19937_64 rng(2);
  for (const auto& f : all_designs()) {
    const PointSet base = load_pointset(f.coords, {}, false);
    const auto ref = inner_product_profile(base, {});
    for (int trial = 0; trial < 10; ++trial) {
      const PointSet ps = load_pointset(gen::rotate_and_permute(f.coords, rng), {}, false);
      const auto prof = inner_product_profile(ps, {});
      ASSERT_EQ(prof.values.size(), ref.values.size()) << f.name;
      for (std::size_t i = 0; i < ref.values.size(); ++i) EXPECT_NEAR(prof.values[i], ref.values[i], 1e-9);
      EXPECT_EQ(prof.counts, ref.counts) << f.name;
      EXPECT_TRUE(check_two_design(ps, {}).passed) << f.name;
    }
  }
  const PointSet box = load_pointset(fixtures::cuboid(), {}, false);
  for (int trial = 0; trial < 10; ++trial)
    EXPECT_FALSE(check_two_design(load_pointset(gen::rotate_and_permute(box.coords, rng), {}, false), {}).passed);
}

TEST(PointSetProperty, GenericSetsAreNotDesignsAndPartitionAllPairs) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> N(3, 14), M(2, 5);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = N(rng), m = M(rng);
    const PointSet ps = load_pointset(gen::generic_sphere_points(n, m, rng), {}, false);
    for (int i = 0; i < n; ++i) EXPECT_NEAR(ps.coords.row(i).squaredNorm(), m, 1e-8 * m);
    const auto prof = inner_product_profile(ps, {});
    long total = 0;
    for (long c : prof.counts) total += c;
    EXPECT_EQ(total, static_cast<long>(n) * n);
    Matrix sum = Matrix::Zero(n, n);
    for (int i = 0; i <= prof.s(); ++i) sum += relation_matrix(prof, i);
    EXPECT_EQ(sum, Matrix::Ones(n, n));
    EXPECT_EQ(relation_matrix(prof, 0), Matrix::Identity(n, n));
    EXPECT_FALSE(check_two_design(ps, {}).passed);
  }
}

TEST(OrthopolyProperty, RandomMeasuresGiveOrthogonalSequencesWithConsistentRecurrences) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> U(-1.0, 1.0), W(0.1, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int size = 2 + trial % 4;
    DiscreteMeasure mu;
    mu.points.push_back(2.0);  // anchor strictly above the other support points
    mu.weights.push_back(W(rng));
    for (int i = 1; i < size; ++i) {
      mu.points.push_back(-1.0 + 2.0 * (i - 1 + 0.5 * (U(rng) + 1) * 0.8 + 0.1) / (size - 1));
      mu.weights.push_back(W(rng));
    }
    const auto seq = orthogonal_sequence(mu, 2.0, {});
    ASSERT_EQ(seq.s(), size - 1);
    EXPECT_LE(orthogonality_residual(seq, mu), 1e-8);
    EXPECT_LE(recurrence_residual(seq, mu), 1e-8);
    for (int k = 0; k <= seq.s(); ++k) {
      EXPECT_GT(seq.values_at_anchor[k], 0.0);
      EXPECT_EQ(seq.q[k].degree(), k);
    }
    const auto rec = monic_recurrence(mu);
    for (int k = 0; k <= seq.s(); ++k) {
      const double ck = seq.q[k].leading();
      EXPECT_NEAR(seq.diag[k], rec.alpha[k], 1e-8);
      if (k < seq.s()) EXPECT_NEAR(seq.upper[k], ck / seq.q[k + 1].leading(), 1e-8 * (1 + std::abs(seq.upper[k])));
      if (k > 0) EXPECT_NEAR(seq.lower[k], rec.beta[k] * ck / seq.q[k - 1].leading(), 1e-8 * (1 + std::abs(seq.lower[k])));
    }
    const auto ref = oracle::moment_polynomials(mu.points, mu.weights, 2.0);
    for (std::size_t k = 0; k < ref.size(); ++k)
      EXPECT_LE(max_coefficient_difference(seq.q[k], Polynomial(ref[k])), 1e-6);
  }
}

TEST(OrthopolyProperty, SumIdentityOnRotatedDesigns) {
  std::mt19937_64 rng(5);
  for (const auto& f : all_designs()) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto r = run_design(gen::rotate_and_permute(f.coords, rng));
      const auto rep = hoffman_sum_check(r.seq, r.prof, r.ps.n(), r.ps.m(), &r.G);
      EXPECT_LE(rep.coefficient_residual, 1e-8) << f.name;
      EXPECT_LE(*rep.gram_residual, 1e-8) << f.name;
      EXPECT_LE(max_coefficient_difference(r.seq.q[1], Polynomial({0.0, 1.0})), 1e-12);
    }
  }
}

TEST(HarmonicProperty, ProjectorsIndependentOfSpanningSet) {
  std::mt19937_64 rng(6);
  for (const Matrix& X : {fixtures::cube(), fixtures::icosahedron(), fixtures::d_roots(5)}) {
    const auto r = run_design(X);
    const int n = r.ps.n();
    const Matrix nG = n * r.G.G;
    std::vector<Matrix> blocks;
    for (int k = 0; k <= r.hd.S; ++k) {
      // A random mix of the degree-k block with all lower blocks spans the same Pol_k.
      Matrix mixed = oracle::hadamard_power(nG, k) * gen::gaussian(n, n, rng);
      for (int j = 0; j < k; ++j) mixed += oracle::hadamard_power(nG, j) * gen::gaussian(n, n, rng);
      blocks.push_back(mixed);
    }
    const auto remixed = layered_projectors(blocks, {});
    ASSERT_EQ(remixed.S, r.hd.S);
    for (int k = 0; k <= r.hd.S; ++k) EXPECT_LE((remixed.F[k] - r.hd.F[k]).norm(), 1e-8);
  }
}

TEST(HarmonicProperty, RelabelingConjugatesProjectors) {
  std::mt19937_64 rng(7);
  for (const auto& f : all_designs()) {
    const auto r = run_design(f.coords);
    const auto perm = gen::random_permutation(r.ps.n(), rng);
    const auto s = run_design(gen::permute_rows(f.coords, perm));
    const Matrix P = permutation_matrix(perm);
    ASSERT_EQ(s.hd.S, r.hd.S);
    for (int k = 0; k <= r.hd.S; ++k) EXPECT_LE((s.hd.F[k] - P * r.hd.F[k] * P.transpose()).norm(), 1e-8) << f.name;
  }
}

TEST(HarmonicProperty, LemmaSuiteOnRotatedDesigns) {
  std::mt19937_64 rng(8);
  for (const auto& f : all_designs()) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto r = run_design(gen::rotate_and_permute(f.coords, rng));
      const auto rep = verify_projection_identities(r.hd, r.G);
      EXPECT_LE(rep.max_residual(), 1e-8) << f.name;
      EXPECT_LE(r.hd.S, r.prof.s());
    }
  }
}

TEST(ExcessProperty, InequalityAndDetectorAgreementUnderSymmetries) {
  std::mt19937_64 rng(9);
  for (const auto& f : all_designs()) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto r = run_design(gen::rotate_and_permute(f.coords, rng));
      ASSERT_TRUE(r.report.hypothesis_met) << f.name;
      EXPECT_LE(r.report.mu, r.report.bound * (1 + 1e-8)) << f.name;
      EXPECT_GE(r.report.gap, -1e-8 * r.report.bound);
      EXPECT_EQ(r.report.equality, r.cert->certified) << f.name;
      EXPECT_EQ(r.report.equality, testing_support::scheme_detector(r)) << f.name;
      EXPECT_TRUE(r.cert->lemma_consistent);
      EXPECT_LE(r.report.pythagoras_residual, 1e-8);
    }
  }
}

TEST(SchemeProperty, RelabelingPreservesIntersectionNumbersAndEigenmatrices) {
  std::mt19937_64 rng(10);
  for (const Matrix& X : {fixtures::cube(), fixtures::icosahedron(), fixtures::hypercube(4)}) {
    const auto base = run_design(X);
    const auto ref = *verify_scheme(base.prof.class_of).scheme;
    const auto ref_es = eigen_structure(ref, {});
    for (int trial = 0; trial < 5; ++trial) {
      const auto perm = gen::random_permutation(ref.n, rng);
      IndexMatrix c(ref.n, ref.n);
      for (int i = 0; i < ref.n; ++i)
        for (int j = 0; j < ref.n; ++j) c(i, j) = ref.classes(perm[i], perm[j]);
      const auto v = verify_scheme(c);
      ASSERT_TRUE(v.verified());
      EXPECT_EQ(v.scheme->intersection, ref.intersection);
      const auto es = eigen_structure(*v.scheme, {});
      EXPECT_LE((es.P - ref_es.P).norm(), 1e-8);
      EXPECT_EQ(es.ranks, ref_es.ranks);
    }
  }
}

TEST(GraphProperty, CirculantGraphsObeySpectralExcessTheorem) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> N(5, 16);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = N(rng);
    std::uniform_int_distribution<int> J(1, n / 2);
    std::vector<int> jumps{J(rng), J(rng)};
    const Graph g = circulant(n, jumps);
    if (!g.connected()) continue;
    const auto r = spectral_excess_report(g, {});
    ++checked;
    EXPECT_LE(r.D, r.d);
    EXPECT_NEAR(r.predistance_sum, n, 1e-8 * n);
    EXPECT_EQ(r.drg, oracle::distance_regular(g.adjacency()));
    if (r.hypothesis_met) {
      EXPECT_LE(r.mean_excess, r.bound * (1 + 1e-8));
      EXPECT_EQ(r.drg, r.equality);
    }
  }
  EXPECT_GT(checked, 30);
}
