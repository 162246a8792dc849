#include <functional>
#include <random>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracle.hpp"
#include "qexcess/error.hpp"
#include "qexcess/fixtures.hpp"
#include "qexcess/orthopoly.hpp"
#include "qexcess/pointset.hpp"
#include "qexcess/scheme.hpp"

using namespace qexcess;

namespace {

IndexMatrix partition_of(const Matrix& X) {
  const PointSet ps = load_pointset(X, {}, false);
  return inner_product_profile(ps, {}).class_of;
}

AssociationScheme scheme_of(const Matrix& X) {
  auto v = verify_scheme(partition_of(X));
  EXPECT_TRUE(v.verified());
  return *v.scheme;
}

int index_of_rank(const EigenStructure& es, int rank) {
  for (int i = 0; i <= es.d(); ++i)
    if (es.ranks[i] == rank) return i;
  return -1;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::InvalidInput;
}

// Recount a witness directly from the class matrix.
long count_paths(const IndexMatrix& c, Pair p, int i, int j) {
  long count = 0;
  for (int z = 0; z < c.rows(); ++z) count += (c(p.x, z) == i && c(z, p.y) == j);
  return count;
}

}  // namespace

TEST(VerifyScheme, OctahedronPartition) {
  const auto sch = scheme_of(fixtures::octahedron());
  EXPECT_EQ(sch.d, 2);
  EXPECT_EQ(sch.p(1, 1, 1), 2);
  EXPECT_EQ(sch.valencies, (std::vector<long>{1, 4, 1}));
}

TEST(VerifyScheme, CubePartitionIsTriangleFree) {
  const auto sch = scheme_of(fixtures::cube());
  EXPECT_EQ(sch.d, 3);
  EXPECT_EQ(sch.p(1, 1, 1), 0);
  EXPECT_EQ(sch.valencies, (std::vector<long>{1, 3, 3, 1}));
}

TEST(VerifyScheme, IntersectionNumbersMatchTripleLoopOracle) {
  std::vector<Matrix> sets{fixtures::icosahedron(), fixtures::hypercube(4), fixtures::d_roots(4)};
  for (const auto& f : fixtures::design_fixtures()) sets.push_back(f.coords);
  for (const auto& X : sets) {
    const IndexMatrix c = partition_of(X);
    const auto ref = oracle::intersection_numbers(c);
    ASSERT_TRUE(ref.has_value());
    const auto sch = scheme_of(X);
    for (int k = 0; k <= sch.d; ++k)
      for (int i = 0; i <= sch.d; ++i)
        for (int j = 0; j <= sch.d; ++j) {
          EXPECT_EQ(sch.p(k, i, j), (*ref)[k][i][j]);
          EXPECT_EQ(sch.p(k, i, j), sch.p(k, j, i));
        }
    long total = 0;
    for (int i = 0; i <= sch.d; ++i) total += sch.valencies[i];
    EXPECT_EQ(total, sch.n);
  }
}

TEST(VerifyScheme, GenericPointsRefutedWithCheckableWitness) {
  std::mt19937_64 rng(8);
  const Matrix X = gen::generic_sphere_points(8, 3, rng);
  const IndexMatrix c = partition_of(X);
  EXPECT_EQ(c.maxCoeff(), 8 * 7 / 2);
  const auto v = verify_scheme(c);
  ASSERT_FALSE(v.verified());
  const auto& w = *v.refutation;
  EXPECT_EQ(w.axiom, SchemeRefutation::Axiom::IntersectionNumbers);
  EXPECT_EQ(c(w.first.x, w.first.y), w.k);
  EXPECT_EQ(c(w.second.x, w.second.y), w.k);
  EXPECT_EQ(count_paths(c, w.first, w.i, w.j), w.first_count);
  EXPECT_EQ(count_paths(c, w.second, w.i, w.j), w.second_count);
  EXPECT_NE(w.first_count, w.second_count);
  EXPECT_FALSE(oracle::intersection_numbers(c).has_value());
}

TEST(VerifyScheme, AxiomViolations) {
  IndexMatrix diag(2, 2);
  diag << 0, 1, 1, 1;
  EXPECT_EQ(verify_scheme(diag).refutation->axiom, SchemeRefutation::Axiom::DiagonalRelation);
  IndexMatrix asym(3, 3);
  asym << 0, 1, 2, 2, 0, 1, 1, 2, 0;
  EXPECT_EQ(verify_scheme(asym).refutation->axiom, SchemeRefutation::Axiom::Symmetry);
}

TEST(VerifyScheme, NotAPartition) {
  EXPECT_EQ(kind_of([] { verify_scheme(IndexMatrix::Zero(2, 3)); }), ErrorKind::NotAPartition);
  IndexMatrix neg(2, 2);
  neg << 0, -1, -1, 0;
  EXPECT_EQ(kind_of([&] { verify_scheme(neg); }), ErrorKind::NotAPartition);
  IndexMatrix gap(2, 2);
  gap << 0, 2, 2, 0;
  EXPECT_EQ(kind_of([&] { verify_scheme(gap); }), ErrorKind::NotAPartition);
}

TEST(EigenStructure, OctahedronFirstEigenmatrix) {
  const auto es = eigen_structure(scheme_of(fixtures::octahedron()), {});
  EXPECT_EQ(es.ranks, (std::vector<int>{1, 3, 2}));
  Matrix P(3, 3);
  P << 1, 4, 1, 1, 0, -1, 1, -2, 1;
  EXPECT_LE((es.P - P).norm(), 1e-9);
}

TEST(EigenStructure, GeneralIdentities) {
  std::vector<Matrix> sets{fixtures::octahedron(), fixtures::cube(), fixtures::icosahedron(), fixtures::hypercube(4),
                           fixtures::d_roots(4), fixtures::simplex(4)};
  for (const auto& X : sets) {
    const auto sch = scheme_of(X);
    const auto es = eigen_structure(sch, {});
    const int n = sch.n;
    EXPECT_LE((es.idempotents[0] - Matrix::Constant(n, n, 1.0 / n)).norm(), 1e-9);
    EXPECT_LE((es.Q.col(0) - Vector::Ones(sch.d + 1)).norm(), 1e-9);
    EXPECT_LE((es.P * es.Q - n * Matrix::Identity(sch.d + 1, sch.d + 1)).norm(), 1e-8);
    EXPECT_LE(es.pq_residual, 1e-8);
    EXPECT_LE(es.idempotent_residual, 1e-8);
    EXPECT_LE(es.reconstruction_residual, 1e-8);
    EXPECT_LE(es.krein_residual, 1e-8);
    for (int k = 0; k <= sch.d; ++k)
      for (int i = 0; i <= sch.d; ++i)
        for (int j = 0; j <= sch.d; ++j) {
          EXPECT_GE(es.krein_parameter(k, i, j), -1e-8);
          EXPECT_NEAR(es.krein_parameter(k, i, j), es.krein_parameter(k, j, i), 1e-8);
        }
    for (int j = 0; j <= sch.d; ++j)
      for (int i = 0; i <= sch.d; ++i)
        EXPECT_NEAR((es.idempotents[j] * sch.relation(i)).trace(), es.P(j, i) * es.ranks[j], 1e-8);
  }
}

TEST(QPolyOrdering, OctahedronPolynomialsArePredegree) {
  const auto sch = scheme_of(fixtures::octahedron());
  const auto es = eigen_structure(sch, {});
  const int e1 = index_of_rank(es, 3);
  const auto ord = qpoly_ordering(es, sch, e1, {});
  ASSERT_TRUE(ord.has_value());
  EXPECT_EQ(ord->order, (std::vector<int>{0, e1, index_of_rank(es, 2)}));
  const PointSet emb = spherical_embedding(sch, es, e1, {});
  const auto seq = predegree_sequence(inner_product_profile(emb, {}), emb.m(), {});
  for (int i = 0; i <= 2; ++i) EXPECT_LE(max_coefficient_difference(ord->v[i], seq.q[i]), 1e-8);
}

TEST(QPolyOrdering, CubeFound) {
  const auto sch = scheme_of(fixtures::cube());
  const auto es = eigen_structure(sch, {});
  const int e1 = index_of_rank(es, 3);
  const auto ord = qpoly_ordering(es, sch, e1, {});
  ASSERT_TRUE(ord.has_value());
  EXPECT_EQ(ord->order.size(), 4u);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(ord->v[i].degree(), i);
  EXPECT_LE(ord->reconstruction_residual, 1e-8);
}

TEST(QPolyOrdering, TrivialIdempotentGivesNone) {
  const auto sch = scheme_of(fixtures::cube());
  const auto es = eigen_structure(sch, {});
  EXPECT_FALSE(qpoly_ordering(es, sch, 0, {}).has_value());
}

TEST(QPolyOrdering, UniqueForEachStartingIdempotent) {
  // Cube scheme: only the two rank-3 idempotents can generate a chain, and
  // each generates exactly one ordering.
  const auto sch = scheme_of(fixtures::cube());
  const auto es = eigen_structure(sch, {});
  int found = 0;
  for (int e1 = 1; e1 <= es.d(); ++e1) {
    auto ord = qpoly_ordering(es, sch, e1, {});
    if (!ord) continue;
    ++found;
    EXPECT_EQ(es.ranks[e1], 3);
    std::vector<int> sorted = ord->order;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, (std::vector<int>{0, 1, 2, 3}));
  }
  EXPECT_GE(found, 1);
}

TEST(SphericalEmbedding, RecoversProfiles) {
  for (const Matrix& X : {fixtures::octahedron(), fixtures::cube()}) {
    const auto sch = scheme_of(X);
    const auto es = eigen_structure(sch, {});
    const PointSet emb = spherical_embedding(sch, es, index_of_rank(es, 3), {});
    EXPECT_EQ(emb.m(), 3);
    const auto a = inner_product_profile(emb, {});
    const auto b = inner_product_profile(load_pointset(X, {}, false), {});
    ASSERT_EQ(a.values.size(), b.values.size());
    for (std::size_t i = 0; i < a.values.size(); ++i) EXPECT_NEAR(a.values[i], b.values[i], 1e-9);
    EXPECT_EQ(a.counts, b.counts);
    EXPECT_TRUE(check_two_design(emb, {}).passed);
    const Matrix nE = sch.n * es.idempotents[index_of_rank(es, 3)];
    EXPECT_LE((emb.coords * emb.coords.transpose() - nE).norm(), 1e-9);
  }
}

TEST(SphericalEmbedding, TrivialIdempotentCollapsesToOnePoint) {
  const auto sch = scheme_of(fixtures::octahedron());
  const auto es = eigen_structure(sch, {});
  EXPECT_EQ(kind_of([&] { spherical_embedding(sch, es, 0, {}); }), ErrorKind::DuplicatePoint);
}

TEST(MatchIdempotents, IdentityMatchAndMismatch) {
  const auto sch = scheme_of(fixtures::cube());
  const auto es = eigen_structure(sch, {});
  const auto m = match_idempotents(es, es.idempotents, 1e-8);
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(*m, (std::vector<int>{0, 1, 2, 3}));
  std::vector<Matrix> off{es.idempotents[0], es.idempotents[1] + es.idempotents[2]};
  EXPECT_FALSE(match_idempotents(es, off, 1e-8).has_value());
}
