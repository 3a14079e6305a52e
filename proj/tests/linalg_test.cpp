#include <cmath>
#include <random>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <gtest/gtest.h>

#include "diamclust/graph.hpp"
#include "diamclust/linalg.hpp"

using namespace diamclust;

namespace {

Eigen::MatrixXd random_symmetric(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m(i, j) = m(j, i) = normal(rng);
  return m;
}

}  // namespace

TEST(MinEigenvalue, CompleteGraphs) {
  for (Index n = 2; n <= 5; ++n) {
    const Eigen::MatrixXd a = adjacency_matrix(graphs::complete(n));
    const double lambda = min_eigenvalue(a);
    EXPECT_NEAR(lambda, -1.0, 1e-9);
    // -1 is a root of the characteristic polynomial det(A - x I).
    EXPECT_NEAR((a + Eigen::MatrixXd::Identity(n, n)).determinant(), 0.0, 1e-9);
  }
}

TEST(MinEigenvalue, PathAndZero) {
  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  const double lambda = min_eigenvalue(adjacency_matrix(graphs::path(4)));
  EXPECT_NEAR(lambda, -golden, 1e-9);
  // Root of x^4 - 3x^2 + 1.
  EXPECT_NEAR(std::pow(lambda, 4) - 3 * lambda * lambda + 1, 0.0, 1e-9);
  EXPECT_EQ(min_eigenvalue(Eigen::MatrixXd::Zero(3, 3)), 0.0);
}

TEST(SymmetricEigenvalues, AgreeWithEigenSolver) {
  std::mt19937_64 rng(42);
  for (int n : {1, 2, 3, 7, 20, 60}) {
    const Eigen::MatrixXd m = random_symmetric(n, rng);
    const Eigen::VectorXd ours = symmetric_eigenvalues(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(m, Eigen::EigenvaluesOnly);
    ASSERT_EQ(ours.size(), n);
    EXPECT_LE((ours - ref.eigenvalues()).cwiseAbs().maxCoeff(), 1e-9 * std::max(1.0, m.norm()));
  }
}

TEST(SymmetricEigenvalues, Errors) {
  Eigen::MatrixXd m(2, 2);
  m << 1, 2, 3, 4;
  EXPECT_THROW(symmetric_eigenvalues(m), InvalidInput);
  EXPECT_THROW(symmetric_eigenvalues(Eigen::MatrixXd(2, 3)), InvalidInput);
  EXPECT_THROW(min_eigenvalue(Eigen::MatrixXd(0, 0)), InvalidInput);

  JacobiOptions no_sweeps;
  no_sweeps.max_sweeps = 0;
  Eigen::MatrixXd off(2, 2);
  off << 0, 1, 1, 0;
  EXPECT_THROW(symmetric_eigenvalues(off, no_sweeps), NonConvergence);
}

TEST(PsdFactor, Examples) {
  EXPECT_EQ(psd_factor(Eigen::MatrixXd::Identity(4, 4)), Eigen::MatrixXd::Identity(4, 4));

  Eigen::MatrixXd q(2, 2);
  q << 4, 2, 2, 3;
  const Eigen::MatrixXd u = psd_factor(q);
  EXPECT_LE((u.transpose() * u - q).cwiseAbs().maxCoeff(), 1e-12);

  Eigen::MatrixXd indefinite(2, 2);
  indefinite << 1, 2, 2, 1;
  EXPECT_THROW(psd_factor(indefinite), NotPositiveDefinite);
  EXPECT_THROW(psd_factor(Eigen::MatrixXd::Zero(2, 2)), NotPositiveDefinite);
}

TEST(PsdFactor, RoundTripAndAgreesWithLLT) {
  std::mt19937_64 rng(9);
  for (int n : {1, 3, 10, 40, 80}) {
    const Eigen::MatrixXd b = random_symmetric(n, rng);
    Eigen::MatrixXd q = b * b.transpose() + 0.5 * Eigen::MatrixXd::Identity(n, n);
    q = (0.5 * (q + q.transpose())).eval();
    const Eigen::MatrixXd u = psd_factor(q);
    EXPECT_TRUE(u.isUpperTriangular());
    EXPECT_LE((u.transpose() * u - q).cwiseAbs().maxCoeff(), 1e-10 * q.cwiseAbs().maxCoeff());
    const Eigen::MatrixXd l = Eigen::LLT<Eigen::MatrixXd>(q).matrixL();
    EXPECT_LE((u - l.transpose()).cwiseAbs().maxCoeff(), 1e-8);
  }
}
