#pragma once

// Bernoulli and Clausen kernel families, the master function
//   F(s;x) = sign * alpha0 * Gamma(s+1) / (2 pi)^s * e^{phase * i pi s / 2} * Li_s(e^{2 pi i x}),
// Hermite polynomials and the correspondence constant c_n.

#include <cstdint>
#include <string>
#include <vector>

#include "umbral/check_result.hpp"
#include "umbral/fourier_series.hpp"
#include "umbral/specfun.hpp"

namespace umbral {

double bernoulli_poly(int n, double x);

/// Truncated kernel value with the bound on the omitted tail.
struct KernelValue {
  double value = 0.0;
  double tail_bound = 0.0;
  std::int64_t terms = 0;
};

/// Periodic Bernoulli function B~_n(x) = -n!/(2 pi i)^n sum_{k != 0} e^{2 pi i k x} / k^n,
/// summed over 1 <= k <= K. Odd n: sine series, even n: cosine series with
/// sign (-1)^{n/2+1}.
KernelValue periodic_bernoulli(int n, CirclePoint x, std::int64_t K);

/// Coefficients of B~_n on modes |k| <= K.
FourierSeries periodic_bernoulli_series(int n, std::int64_t K);

/// The odd sine kernel -2 (2n+1)!/(2 pi)^{2n+1} sum_k sin(2 pi k x)/k^{2n+1}.
/// Equals (-1)^n B~_{2n+1}.
FourierSeries odd_sine_kernel_series(int n, std::int64_t K);

/// Cosine series 2 (2n+1)!/(2 pi)^{2n+1} sum_k cos(2 pi k x)/k^{2n+1}, built
/// directly from its coefficients.
FourierSeries odd_cosine_kernel_series(int n, std::int64_t K);

/// Analytic: A(1;x) = -log(2 sin pi x). Dual: A_m = H[B~_m], the Hilbert image
/// of the periodic Bernoulli kernel. Analytic = pi * Dual at every order.
enum class Normalization { Analytic, Dual };

const char* to_string(Normalization conv);

/// Analytic / Dual.
double normalization_factor();

/// Truncated Clausen-type dual of order m.
KernelValue clausen_dual(int m, CirclePoint x, std::int64_t K, Normalization conv);

/// Closed forms on (0,1): B~_n via bernoulli_poly, A_m via the integer
/// polylogarithm, -2 m!/(2 pi)^m Im(i^{-m} Li_m(e^{2 pi i x})) in the Dual
/// normalization.
double periodic_bernoulli_exact(int n, CirclePoint x);
double clausen_dual_exact(int m, CirclePoint x, Normalization conv);

struct MasterFunctionConfig {
  double alpha0 = 2.0;
  /// Sign of the exponent in e^{+- i pi s / 2}.
  int phase_sign = -1;
  /// A(s;x) = -a_prefactor * Im F(s;x).
  double a_prefactor = 1.0 / kPi;
  int overall_sign = 1;

  /// The master function exactly as written (alpha0 = 2, e^{-i pi s/2},
  /// a = 1/pi, no sign flip).
  static MasterFunctionConfig literal() { return {}; }
  void validate() const;
  [[nodiscard]] std::string describe() const;

  friend bool operator==(const MasterFunctionConfig&, const MasterFunctionConfig&) = default;
};

cplx master_F(AnalyticOrder s, CirclePoint x, const MasterFunctionConfig& cfg,
              const Precision& prec = {});

/// Re F
double analytic_B(AnalyticOrder s, CirclePoint x, const MasterFunctionConfig& cfg,
                  const Precision& prec = {});
/// -a_prefactor * Im F
double analytic_A(AnalyticOrder s, CirclePoint x, const MasterFunctionConfig& cfg,
                  const Precision& prec = {});

struct Anchor {
  enum class Family { B, A };
  Family family = Family::B;
  AnalyticOrder s = 1.0;
  double x = 0.5;
  double expected = 0.0;
};

/// B(1;x) = x - 1/2 and A(1;x) = -log(2 sin pi x) at x = 1/12, 2/12, ..., 11/12.
std::vector<Anchor> default_anchors();

struct CalibrationCandidate {
  MasterFunctionConfig config;
  double residual = 0.0;
  double ladder_residual = 0.0;
};

struct CalibrationRecord {
  MasterFunctionConfig config;
  double residual = 0.0;
  double ladder_residual = 0.0;
  std::vector<CalibrationCandidate> candidates;
};

/// Searches phase_sign x overall_sign x a_prefactor in {1/pi, -pi} for the
/// config minimizing the maximum anchor residual. Ties are broken by the
/// ladder residual dF/dx = s F(s-1) at (s, x) = (2.5, 0.3).
/// Throws CalibrationError on empty anchors, fewer than two distinct x,
/// best residual > 1e-8, or an unresolved tie.
CalibrationRecord calibrate_master(const std::vector<Anchor>& anchors);

/// Calibration against default_anchors(), computed once.
const CalibrationRecord& default_calibration();

/// B(s;1) = -s zeta(1-s). Integer s compares bernoulli_poly(s, 1); other s
/// compares the Hurwitz route at a = 1 against the Riemann zeta route.
CheckResult hasse_check(AnalyticOrder s, const MasterFunctionConfig& cfg);

/// Physicists' Hermite polynomial by the three-term recurrence, m <= 200.
double hermite_poly(int m, double x);

/// m! [t^m] e^{-t^2 + 2 x t} by circular sampling of radius t_radius
/// (<= 0 selects sqrt(max(m,1)/2)). m <= 30.
double hermite_from_genfun(int m, double x, double t_radius = 0.0);

/// Roots of H_N in ascending order by safeguarded Newton from interlacing
/// brackets.
std::vector<double> hermite_roots(int N);

/// c_n = (-1)^n 2^{2n+1} (2n+1)! zeta(2n+1) / pi^{2n+1}, n >= 1.
double correspondence_constant(int n);

}  // namespace umbral
