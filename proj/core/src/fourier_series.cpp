#include "umbral/fourier_series.hpp"

#include <cmath>
#include <utility>

#include "umbral/errors.hpp"
#include "detail.hpp"

namespace umbral {

namespace {

using detail::frac_product;

void require_same_K(const FourierSeries& a, const FourierSeries& b) {
  if (a.K() != b.K()) throw DomainError("FourierSeries: truncation orders differ");
}

}  // namespace

FourierSeries::FourierSeries(std::int64_t K) : K_(K) {
  if (K < 1) throw RangeError("FourierSeries: K must be >= 1");
  coeffs_.assign(static_cast<std::size_t>(2 * K + 1), cplx(0.0));
}

FourierSeries::FourierSeries(std::int64_t K, std::vector<cplx> coeffs)
    : K_(K), coeffs_(std::move(coeffs)) {
  if (K < 1) throw RangeError("FourierSeries: K must be >= 1");
  if (coeffs_.size() != static_cast<std::size_t>(2 * K + 1)) {
    throw DomainError("FourierSeries: expected 2K+1 coefficients");
  }
}

FourierSeries FourierSeries::mode(std::int64_t K, std::int64_t k) {
  FourierSeries f(K);
  if (k < -K || k > K) throw RangeError("FourierSeries::mode: |k| > K");
  f[k] = 1.0;
  return f;
}

FourierSeries FourierSeries::sine_mode(std::int64_t K, std::int64_t k) {
  if (k < 1 || k > K) throw RangeError("FourierSeries::sine_mode: need 1 <= k <= K");
  FourierSeries f(K);
  f[k] = cplx(0.0, -0.5);
  f[-k] = cplx(0.0, 0.5);
  return f;
}

FourierSeries FourierSeries::cosine_mode(std::int64_t K, std::int64_t k) {
  if (k < 1 || k > K) throw RangeError("FourierSeries::cosine_mode: need 1 <= k <= K");
  FourierSeries f(K);
  f[k] = 0.5;
  f[-k] = 0.5;
  return f;
}

FourierSeries FourierSeries::from_samples(const std::function<double(double)>& f, std::int64_t K,
                                          std::int64_t samples) {
  if (samples < 2 * K + 1) throw RangeError("FourierSeries::from_samples: need M >= 2K+1");
  std::vector<double> values(static_cast<std::size_t>(samples));
  for (std::int64_t j = 0; j < samples; ++j) {
    const double v = f(static_cast<double>(j) / static_cast<double>(samples));
    if (!std::isfinite(v)) throw DomainError("FourierSeries::from_samples: non-finite sample");
    values[static_cast<std::size_t>(j)] = v;
  }
  FourierSeries out(K);
  const double inv_m = 1.0 / static_cast<double>(samples);
  for (std::int64_t k = -K; k <= K; ++k) {
    cplx acc = 0.0;
    for (std::int64_t j = 0; j < samples; ++j) {
      // exact phase index k j mod M
      std::int64_t idx = (k * j) % samples;
      if (idx < 0) idx += samples;
      acc += values[static_cast<std::size_t>(j)] *
             unit_phase(-static_cast<double>(idx) * inv_m);
    }
    out[k] = acc * inv_m;
  }
  return out;
}

cplx FourierSeries::evaluate(double x) const {
  cplx acc = (*this)[0];
  for (std::int64_t k = K_; k >= 1; --k) {
    const cplx e = unit_phase(frac_product(static_cast<double>(k), x));
    acc += (*this)[k] * e + (*this)[-k] * std::conj(e);
  }
  return acc;
}

double FourierSeries::norm2() const {
  double acc = 0.0;
  for (const cplx& c : coeffs_) acc += std::norm(c);
  return acc;
}

cplx FourierSeries::inner(const FourierSeries& other) const {
  require_same_K(*this, other);
  cplx acc = 0.0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) acc += coeffs_[i] * std::conj(other.coeffs_[i]);
  return acc;
}

cplx FourierSeries::pairing(const FourierSeries& other) const {
  require_same_K(*this, other);
  cplx acc = 0.0;
  for (std::int64_t k = -K_; k <= K_; ++k) acc += (*this)[k] * other[-k];
  return acc;
}

bool FourierSeries::is_real() const {
  for (std::int64_t k = 0; k <= K_; ++k) {
    if ((*this)[-k] != std::conj((*this)[k])) return false;
  }
  return true;
}

FourierSeries& FourierSeries::operator+=(const FourierSeries& other) {
  require_same_K(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

FourierSeries& FourierSeries::operator-=(const FourierSeries& other) {
  require_same_K(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

FourierSeries& FourierSeries::operator*=(cplx scale) {
  for (cplx& c : coeffs_) c *= scale;
  return *this;
}

FourierSeries operator+(FourierSeries a, const FourierSeries& b) { return a += b; }
FourierSeries operator-(FourierSeries a, const FourierSeries& b) { return a -= b; }
FourierSeries operator*(cplx scale, FourierSeries a) { return a *= scale; }

}  // namespace umbral
