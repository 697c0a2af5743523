#pragma once

// Scalar special functions: Gamma, Riemann and Hurwitz zeta, the polylogarithm
// on the unit circle, Bernoulli numbers.
//
// All functions are pure and reentrant.

#include <complex>
#include <cstdint>

namespace umbral {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Series controls shared by the zeta/polylog evaluators.
struct Precision {
  double rel_tol = 1e-12;
  std::int64_t max_terms = 10'000'000;
  int euler_maclaurin_order = 12;

  /// Throws DomainError when the fields break their invariants
  /// (rel_tol >= 1e-15, max_terms > 0, positive even order).
  void validate() const;
};

/// Complex order parameter s; construction rejects non-finite values.
class AnalyticOrder {
 public:
  AnalyticOrder(double s);  // NOLINT(google-explicit-constructor)
  AnalyticOrder(cplx s);    // NOLINT(google-explicit-constructor)

  [[nodiscard]] cplx value() const { return value_; }
  [[nodiscard]] double real() const { return value_.real(); }
  [[nodiscard]] double imag() const { return value_.imag(); }
  [[nodiscard]] bool is_real() const { return value_.imag() == 0.0; }
  /// True when s is a real integer; `n` receives it.
  [[nodiscard]] bool is_integer(long* n = nullptr) const;

 private:
  cplx value_;
};

/// Position on the circle in full turns, strictly inside (0, 1).
class CirclePoint {
 public:
  explicit CirclePoint(double x);

  [[nodiscard]] double x() const { return x_; }
  /// Distance to the nearest endpoint, min(x, 1 - x).
  [[nodiscard]] double boundary_distance() const;
  [[nodiscard]] CirclePoint reflected() const { return CirclePoint(1.0 - x_); }

 private:
  double x_;
};

// sin(pi z) and cos(pi z) with exact zeros at the integers / half-integers.
double sin_pi(double x);
double cos_pi(double x);
cplx sin_pi(cplx z);
cplx cos_pi(cplx z);

/// e^{2 pi i t} from sin_pi/cos_pi.
cplx unit_phase(double t);

/// Gamma function. Lanczos (g = 607/128, 15 terms) in the right half plane and
/// reflection for Re z < 1/2.
cplx gamma(cplx z);
double gamma(double x);

/// log Gamma(z): Lanczos log form for Re z >= 1/2, reflected below (branch
/// not continuous across the reflection line).
cplx log_gamma(cplx z);

/// Bernoulli number B_n, n <= 64, with B_1 = -1/2. Exact rational
/// recurrence rounded once to double.
double bernoulli_number(int n);

/// Riemann zeta. Borwein's eta acceleration for Re s >= 1/2, functional
/// equation below.
cplx riemann_zeta(AnalyticOrder s, const Precision& prec = {});

/// Hurwitz zeta zeta(s, a), 0 < a <= 1.
cplx hurwitz_zeta(AnalyticOrder s, double a, const Precision& prec = {});

/// sum_{k >= start} (k + a)^{-s} by Euler-Maclaurin alone, any a > 0.
/// Re s >= -1/2, s != 1.
cplx hurwitz_zeta_from(AnalyticOrder s, double a, std::int64_t start,
                       const Precision& prec = {});

/// Li_s(e^{2 pi i x}).
///
/// Routing: direct series (with asymptotic tail) for Re s > 1.5, Hurwitz
/// formula through zeta(1-s, x) and zeta(1-s, 1-x) otherwise. Near the
/// removable singularities of the Hurwitz route (s = 0, 1) the direct route
/// is used; near the circle endpoints, where the direct route needs too
/// many terms, integer orders switch to the log-series about z = 1 and
/// non-integer orders to the Hurwitz route.
cplx polylog_circle(AnalyticOrder s, CirclePoint x, const Precision& prec = {});

/// Result of a truncated series together with its tail bound.
struct SeriesValue {
  cplx value;
  double tail_bound = 0.0;
  std::int64_t terms = 0;
};

/// Direct route only: sum_{k<K} e^{2 pi i k x} k^{-s} plus the asymptotic
/// expansion of the remainder in powers of 1/K. Valid for any s; throws
/// ConvergenceError when the required K exceeds prec.max_terms.
SeriesValue polylog_circle_direct(AnalyticOrder s, CirclePoint x,
                                  const Precision& prec = {});

/// Hurwitz route only (invalid at positive integers s >= 2 and at s = 0).
cplx polylog_circle_hurwitz(AnalyticOrder s, CirclePoint x,
                            const Precision& prec = {});

/// Integer order m >= 1 by the logarithmic series about z = 1.
cplx polylog_circle_integer(int m, CirclePoint x);

}  // namespace umbral
