#pragma once

// Oscillator-side operators on the truncated basis phi_0 .. phi_{N-1}.

#include <utility>

#include <Eigen/Dense>

namespace umbral {

using FockMatrix = Eigen::MatrixXcd;

class FockOperator {
 public:
  explicit FockOperator(FockMatrix m);

  [[nodiscard]] int N() const { return static_cast<int>(m_.rows()); }
  [[nodiscard]] const FockMatrix& matrix() const { return m_; }
  /// Top-left block on phi_0 .. phi_{n-1}.
  [[nodiscard]] FockMatrix block(int n) const { return m_.topLeftCorner(n, n); }

  friend FockOperator operator*(const FockOperator& a, const FockOperator& b) {
    return FockOperator(a.m_ * b.m_);
  }

 private:
  FockMatrix m_;
};

/// Real-symmetric tridiagonal, off-diagonal sqrt(m/2), 2 <= N <= 512.
FockOperator jacobi_matrix(int N);

/// (a, a^dagger): a phi_m = sqrt(m) phi_{m-1}. N >= 2.
std::pair<FockOperator, FockOperator> ladder_ops(int N);

/// x = (a + a^dagger)/sqrt 2, p = i (a^dagger - a)/sqrt 2.
FockOperator position_op(int N);
FockOperator momentum_op(int N);

struct Displacement {
  FockOperator op;
  /// Largest singular value of D^dagger D - I.
  double unitarity_defect = 0.0;
  /// Max-entry difference on the protected block between the N-truncation
  /// and a 2N-truncation of the same displacement.
  double truncation_error = 0.0;
};

/// Size of the protected block, N/2.
int protected_dim(int N);

/// D(xi, eta) = exp(i (xi p - eta x)) by Pade scaling and squaring.
/// |xi|, |eta| <= 2, N >= 8 (1 + xi^2 + eta^2), N <= 512. Throws
/// TruncationError when the protected block moves by more than 1e-6 under
/// doubling of the basis.
Displacement weyl_displacement(double xi, double eta, int N);

/// Max-entry residual of D(xi,eta) D(xi',eta') - e^{-i(xi eta' - eta xi')/2} D(xi+xi', eta+eta')
/// on the protected block.
double composition_residual(double xi, double eta, double xi2, double eta2, int N);

}  // namespace umbral
