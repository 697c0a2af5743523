#pragma once

// Truncated bilateral Fourier series on the unit circle,
//   f(x) = sum_{k=-K}^{K} c_k e^{2 pi i k x}.

#include <cstdint>
#include <functional>
#include <vector>

#include "umbral/specfun.hpp"

namespace umbral {

class FourierSeries {
 public:
  /// Zero series with modes -K..K. K must be >= 1.
  explicit FourierSeries(std::int64_t K);
  /// Coefficients ordered k = -K..K (size 2K+1).
  FourierSeries(std::int64_t K, std::vector<cplx> coeffs);

  /// Single mode e^{2 pi i k x}.
  static FourierSeries mode(std::int64_t K, std::int64_t k);
  static FourierSeries sine_mode(std::int64_t K, std::int64_t k);
  static FourierSeries cosine_mode(std::int64_t K, std::int64_t k);

  /// Coefficients of a real 1-periodic function from M >= 2K+1 uniform
  /// samples (plain DFT, aliasing error not corrected).
  static FourierSeries from_samples(const std::function<double(double)>& f, std::int64_t K,
                                    std::int64_t samples);

  [[nodiscard]] std::int64_t K() const { return K_; }
  [[nodiscard]] cplx operator[](std::int64_t k) const {
    return coeffs_[static_cast<std::size_t>(k + K_)];
  }
  cplx& operator[](std::int64_t k) { return coeffs_[static_cast<std::size_t>(k + K_)]; }
  [[nodiscard]] const std::vector<cplx>& coeffs() const { return coeffs_; }

  [[nodiscard]] cplx evaluate(double x) const;
  /// sum |c_k|^2
  [[nodiscard]] double norm2() const;
  /// sum a_k conj(b_k), i.e. the L2 inner product over one period.
  [[nodiscard]] cplx inner(const FourierSeries& other) const;
  /// int_0^1 f g dx = sum_k f_k g_{-k} (bilinear, no conjugation).
  [[nodiscard]] cplx pairing(const FourierSeries& other) const;
  /// c_{-k} == conj(c_k) for every k.
  [[nodiscard]] bool is_real() const;

  FourierSeries& operator+=(const FourierSeries& other);
  FourierSeries& operator-=(const FourierSeries& other);
  FourierSeries& operator*=(cplx scale);

  friend bool operator==(const FourierSeries& a, const FourierSeries& b) {
    return a.K_ == b.K_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::int64_t K_;
  std::vector<cplx> coeffs_;
};

FourierSeries operator+(FourierSeries a, const FourierSeries& b);
FourierSeries operator-(FourierSeries a, const FourierSeries& b);
FourierSeries operator*(cplx scale, FourierSeries a);

}  // namespace umbral
