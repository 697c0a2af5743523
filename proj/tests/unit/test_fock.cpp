#include <cmath>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "close.hpp"
#include "golden_values.hpp"
#include "umbral/errors.hpp"
#include "umbral/fock.hpp"
#include "umbral/kernels.hpp"

using namespace umbral;

TEST(Jacobi, StructureAndRange) {
  const FockMatrix J = jacobi_matrix(6).matrix();
  EXPECT_EQ(J(0, 0), cplx(0.0));
  EXPECT_EQ(J(2, 1), cplx(std::sqrt(1.0)));
  EXPECT_EQ(J(1, 2), J(2, 1));
  EXPECT_EQ(J(0, 2), cplx(0.0));
  EXPECT_THROW(jacobi_matrix(1), RangeError);
  EXPECT_THROW(jacobi_matrix(513), RangeError);
}

TEST(Jacobi, N2Anchor) {
  const Eigen::MatrixXd J = jacobi_matrix(2).matrix().real();
  const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(J).eigenvalues();
  EXPECT_NEAR(ev(0), -1.0 / std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(ev(1), 1.0 / std::sqrt(2.0), 1e-12);
}

TEST(Jacobi, SpectrumIsHermiteRoots) {
  for (int N : {5, 10, 20}) {
    const Eigen::MatrixXd J = jacobi_matrix(N).matrix().real();
    const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(J).eigenvalues();
    const std::vector<double> roots = hermite_roots(N);
    for (int i = 0; i < N; ++i) EXPECT_NEAR(ev(i), roots[static_cast<std::size_t>(i)], 1e-8) << N;
  }
  const Eigen::MatrixXd J5 = jacobi_matrix(5).matrix().real();
  const Eigen::VectorXd ev5 = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(J5).eigenvalues();
  for (int i = 0; i < 5; ++i) EXPECT_NEAR(ev5(i), golden::kHermiteRoots5[static_cast<std::size_t>(i)], 1e-13);
}

TEST(Ladder, CommutatorAndTruncationArtifact) {
  const int N = 12;
  const auto [a, ad] = ladder_ops(N);
  const FockMatrix c = a.matrix() * ad.matrix() - ad.matrix() * a.matrix();
  for (int i = 0; i < N - 1; ++i) EXPECT_NEAR(std::abs(c(i, i) - 1.0), 0.0, 8 * N * 2.2e-16);
  EXPECT_NEAR(c(N - 1, N - 1).real(), 1.0 - N, 8 * N * 2.2e-16);
  EXPECT_EQ(a.matrix()(2, 3), cplx(std::sqrt(3.0)));
  EXPECT_EQ(ad.matrix(), a.matrix().adjoint());
}

TEST(Ladder, PositionIsJacobi) {
  EXPECT_TRUE(position_op(9).matrix().isApprox(jacobi_matrix(9).matrix(), 1e-15));
  EXPECT_TRUE(momentum_op(9).matrix().isApprox(momentum_op(9).matrix().adjoint(), 0.0));
}

TEST(Weyl, MatrixElementsMatchOracle) {
  for (const auto& row : golden::kWeyl) {
    const Displacement d = weyl_displacement(row.xi, row.eta, 60);
    EXPECT_TRUE(Close(d.op.matrix()(row.m, row.n), row.value, 1e-12, 1e-14))
        << "xi " << row.xi << " eta " << row.eta << " <" << row.m << "|D|" << row.n << ">";
  }
}

TEST(Weyl, IdentityIsExact) {
  const Displacement d = weyl_displacement(0.0, 0.0, 16);
  EXPECT_EQ(d.op.matrix(), FockMatrix::Identity(16, 16));
}

TEST(Weyl, CompositionLaw) {
  EXPECT_LT(composition_residual(0.3, -0.2, 0.1, 0.4, 60), 1e-8);
  EXPECT_LT(composition_residual(-0.5, 0.5, 0.5, -0.5, 60), 1e-8);
}

TEST(Weyl, Errors) {
  EXPECT_THROW(weyl_displacement(3.0, 0.0, 60), DomainError);
  EXPECT_THROW(weyl_displacement(1.5, 1.5, 16), RangeError);
  EXPECT_EQ(protected_dim(60), 30);
}
