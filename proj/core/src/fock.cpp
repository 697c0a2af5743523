#include "umbral/fock.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>

#include <unsupported/Eigen/MatrixFunctions>

#include "umbral/errors.hpp"

namespace umbral {

namespace {

using cplx = std::complex<double>;

void require_dim(int N, int lo, int hi, const char* what) {
  if (N < lo || N > hi) {
    throw RangeError(std::string(what) + ": N must be in [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "], got " + std::to_string(N));
  }
}

FockMatrix generator(double xi, double eta, int N) {
  // i (xi p - eta x)
  const FockMatrix x = position_op(N).matrix();
  const FockMatrix p = momentum_op(N).matrix();
  return cplx(0.0, 1.0) * (xi * p - eta * x);
}

}  // namespace

FockOperator::FockOperator(FockMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw DomainError("FockOperator: matrix must be square");
}

FockOperator jacobi_matrix(int N) {
  require_dim(N, 2, 512, "jacobi_matrix");
  FockMatrix j = FockMatrix::Zero(N, N);
  for (int m = 1; m < N; ++m) {
    const double beta = std::sqrt(static_cast<double>(m)) / std::sqrt(2.0);
    j(m - 1, m) = beta;
    j(m, m - 1) = beta;
  }
  return FockOperator(std::move(j));
}

std::pair<FockOperator, FockOperator> ladder_ops(int N) {
  require_dim(N, 2, 4096, "ladder_ops");
  FockMatrix a = FockMatrix::Zero(N, N);
  for (int m = 1; m < N; ++m) a(m - 1, m) = std::sqrt(static_cast<double>(m));
  FockMatrix ad = a.transpose();
  return {FockOperator(std::move(a)), FockOperator(std::move(ad))};
}

FockOperator position_op(int N) {
  const auto [a, ad] = ladder_ops(N);
  return FockOperator((a.matrix() + ad.matrix()) / std::sqrt(2.0));
}

FockOperator momentum_op(int N) {
  const auto [a, ad] = ladder_ops(N);
  return FockOperator(cplx(0.0, 1.0) * (ad.matrix() - a.matrix()) / std::sqrt(2.0));
}

int protected_dim(int N) { return N / 2; }

Displacement weyl_displacement(double xi, double eta, int N) {
  if (!std::isfinite(xi) || !std::isfinite(eta) || std::abs(xi) > 2.0 || std::abs(eta) > 2.0) {
    throw DomainError("weyl_displacement: |xi| and |eta| must be <= 2");
  }
  require_dim(N, 2, 512, "weyl_displacement");
  if (N < 8.0 * (1.0 + xi * xi + eta * eta)) {
    throw RangeError("weyl_displacement: N must be >= 8 (1 + xi^2 + eta^2)");
  }
  if (xi == 0.0 && eta == 0.0) {
    return {FockOperator(FockMatrix::Identity(N, N)), 0.0, 0.0};
  }

  FockMatrix d = generator(xi, eta, N).exp();
  const FockMatrix gram = d.adjoint() * d - FockMatrix::Identity(N, N);
  // gram is Hermitian: its largest singular value is its spectral radius
  const double defect =
      gram.isZero(0.0)
          ? 0.0
          : Eigen::SelfAdjointEigenSolver<FockMatrix>(gram, Eigen::EigenvaluesOnly).eigenvalues().cwiseAbs().maxCoeff();

  const int P = protected_dim(N);
  const FockMatrix reference = generator(xi, eta, 2 * N).exp();
  const double truncation =
      (d.topLeftCorner(P, P) - reference.topLeftCorner(P, P)).cwiseAbs().maxCoeff();
  if (truncation > 1e-6) {
    throw TruncationError("weyl_displacement: protected block changes by " +
                          std::to_string(truncation) + " when N is doubled; increase N");
  }
  return {FockOperator(std::move(d)), defect, truncation};
}

double composition_residual(double xi, double eta, double xi2, double eta2, int N) {
  const Displacement d1 = weyl_displacement(xi, eta, N);
  const Displacement d2 = weyl_displacement(xi2, eta2, N);
  const Displacement d12 = weyl_displacement(xi + xi2, eta + eta2, N);
  const cplx phase = std::polar(1.0, -0.5 * (xi * eta2 - eta * xi2));
  const int P = protected_dim(N);
  const FockMatrix lhs = (d1.op * d2.op).block(P);
  const FockMatrix rhs = phase * d12.op.block(P);
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

}  // namespace umbral
