#pragma once

// Operators on truncated Fourier series: periodic Hilbert transform,
// translation, modulation, Dirac-comb pairing, fractional derivative.

#include <cstdint>
#include <functional>
#include <vector>

#include "umbral/check_result.hpp"
#include "umbral/fourier_series.hpp"

namespace umbral {

/// c_k -> -i sgn(k) c_k, c_0 -> 0.
FourierSeries hilbert(const FourierSeries& f);
/// c_k -> +i sgn(k) c_k, c_0 -> 0. Inverse of hilbert on zero-mean series.
FourierSeries hilbert_inverse(const FourierSeries& f);

/// c_k -> e^{2 pi i k t} c_k.
FourierSeries translate(const FourierSeries& f, double t);

struct Modulated {
  FourierSeries series;
  /// sum of |c_k|^2 shifted past the truncation edge.
  double dropped_mass = 0.0;
};

/// Multiplication by e^{2 pi i n x}: index shift k -> k + n, |n| <= K.
Modulated modulate(const FourierSeries& f, std::int64_t n);

/// Operator norm of H T_t H^{-1} - M_n on the k != 0 modes of the
/// K-truncation (dense SVD). |n| <= K/2.
double conjugation_defect(double t, std::int64_t n, std::int64_t K);

struct CombPairing {
  double value = 0.0;
  /// sum_{|n| > K} |f_n| over the modes the series carries.
  double tail_bound = 0.0;
};

/// int_0^1 f(x) Delta_K(x) dx = sum_{|n| <= K} f_{-n}, Delta_K the K-harmonic
/// Dirac comb.
CombPairing comb_pair(const FourierSeries& f, std::int64_t K);
CombPairing comb_pair(const std::function<double(double)>& f, std::int64_t K,
                      std::int64_t series_modes = 0);

/// Periodized Gaussian of width sigma centred at `center`, Fejer-weighted on
/// modes |k| <= K.
FourierSeries gaussian_bump_series(double sigma, double center, std::int64_t K);

/// Multiplier (2 pi i k)^alpha on the principal branch; k = 0 -> 0.
FourierSeries fractional_derivative(const FourierSeries& f, double alpha);

/// (a) partial-fraction cotangent, (b) d/dx log sin(pi x), (c) d/dx A(1;x).
std::vector<CheckResult> cotangent_checks(double x, std::int64_t terms);

/// <B(1;.), -phi'> = int phi - phi(0) over five smooth test functions.
std::vector<CheckResult> weak_derivative_check(std::int64_t K);

/// H^2 = -I, H^4 = I, |Hf| = |f| and [H, T_t] = 0 on zero-mean series,
/// compared exactly.
std::vector<CheckResult> quarter_rotation_checks(std::int64_t K, std::uint64_t seed = 7);

}  // namespace umbral
