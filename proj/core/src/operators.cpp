#include "umbral/operators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "umbral/errors.hpp"
#include "umbral/kernels.hpp"
#include "detail.hpp"

namespace umbral {

namespace {

using detail::frac_product;

// (-i) c and (+i) c by exchanging components, so the multiplier is exact.
cplx times_minus_i(cplx c) { return {c.imag(), -c.real()}; }
cplx times_plus_i(cplx c) { return {-c.imag(), c.real()}; }

// Component-wise product; written out so translations commute with the
// Hilbert multiplier bit for bit.
cplx multiply(cplx a, cplx e) {
  return {a.real() * e.real() - a.imag() * e.imag(), a.real() * e.imag() + a.imag() * e.real()};
}

}  // namespace

FourierSeries hilbert(const FourierSeries& f) {
  FourierSeries out(f.K());
  for (std::int64_t k = 1; k <= f.K(); ++k) {
    out[k] = times_minus_i(f[k]);
    out[-k] = times_plus_i(f[-k]);
  }
  return out;
}

FourierSeries hilbert_inverse(const FourierSeries& f) {
  FourierSeries out(f.K());
  for (std::int64_t k = 1; k <= f.K(); ++k) {
    out[k] = times_plus_i(f[k]);
    out[-k] = times_minus_i(f[-k]);
  }
  return out;
}

FourierSeries translate(const FourierSeries& f, double t) {
  FourierSeries out(f.K());
  out[0] = f[0];
  for (std::int64_t k = 1; k <= f.K(); ++k) {
    const cplx e = unit_phase(frac_product(static_cast<double>(k), t));
    out[k] = multiply(f[k], e);
    out[-k] = multiply(f[-k], std::conj(e));
  }
  return out;
}

Modulated modulate(const FourierSeries& f, std::int64_t n) {
  const std::int64_t K = f.K();
  if (n < -K || n > K) throw RangeError("modulate: |n| must be <= K");
  Modulated out{FourierSeries(K), 0.0};
  for (std::int64_t k = -K; k <= K; ++k) {
    const std::int64_t target = k + n;
    if (target < -K || target > K) {
      out.dropped_mass += std::norm(f[k]);
    } else {
      out.series[target] = f[k];
    }
  }
  return out;
}

double conjugation_defect(double t, std::int64_t n, std::int64_t K) {
  if (K < 1 || K > 1024) throw RangeError("conjugation_defect: K must be in [1, 1024]");
  if (2 * std::abs(n) > K) throw RangeError("conjugation_defect: |n| must be <= K/2");
  // basis: modes -K..-1, 1..K
  const auto dim = static_cast<Eigen::Index>(2 * K);
  auto index_of = [K](std::int64_t k) { return static_cast<Eigen::Index>(k < 0 ? k + K : k + K - 1); };
  Eigen::MatrixXcd defect = Eigen::MatrixXcd::Zero(dim, dim);
  for (std::int64_t k = -K; k <= K; ++k) {
    if (k == 0) continue;
    const FourierSeries basis = FourierSeries::mode(K, k);
    const FourierSeries conj_t = hilbert(translate(hilbert_inverse(basis), t));
    const FourierSeries mod = modulate(basis, n).series;
    for (std::int64_t j = -K; j <= K; ++j) {
      if (j == 0) continue;
      defect(index_of(j), index_of(k)) = conj_t[j] - mod[j];
    }
  }
  if (defect.isZero(0.0)) return 0.0;
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(defect);
  return svd.singularValues()(0);
}

CombPairing comb_pair(const FourierSeries& f, std::int64_t K) {
  if (K < 1) throw RangeError("comb_pair: K must be >= 1");
  CombPairing out;
  const std::int64_t kept = std::min(K, f.K());
  // smallest modes last
  double value = 0.0;
  for (std::int64_t n = kept; n >= 1; --n) value += f[-n].real() + f[n].real();
  out.value = value + f[0].real();
  for (std::int64_t n = kept + 1; n <= f.K(); ++n) out.tail_bound += std::abs(f[n]) + std::abs(f[-n]);
  return out;
}

CombPairing comb_pair(const std::function<double(double)>& f, std::int64_t K,
                      std::int64_t series_modes) {
  const std::int64_t modes = series_modes > 0 ? series_modes : 2 * K;
  return comb_pair(FourierSeries::from_samples(f, modes, 4 * modes + 1), K);
}

FourierSeries gaussian_bump_series(double sigma, double center, std::int64_t K) {
  if (!(sigma > 0.0)) throw DomainError("gaussian_bump_series: sigma must be positive");
  FourierSeries f(K);
  const double amplitude = sigma * std::sqrt(kTwoPi);
  for (std::int64_t k = -K; k <= K; ++k) {
    const double kd = static_cast<double>(k);
    const double fejer = 1.0 - std::abs(kd) / static_cast<double>(K + 1);
    const double mag = amplitude * std::exp(-2.0 * kPi * kPi * sigma * sigma * kd * kd) * fejer;
    f[k] = mag * unit_phase(-frac_product(kd, center));
  }
  return f;
}

FourierSeries fractional_derivative(const FourierSeries& f, double alpha) {
  FourierSeries out(f.K());
  // i^alpha on the principal branch
  const cplx i_alpha(cos_pi(0.5 * alpha), sin_pi(0.5 * alpha));
  for (std::int64_t k = 1; k <= f.K(); ++k) {
    const double mag = std::pow(kTwoPi * static_cast<double>(k), alpha);
    out[k] = f[k] * (mag * i_alpha);
    out[-k] = f[-k] * (mag * std::conj(i_alpha));
  }
  return out;
}

std::vector<CheckResult> cotangent_checks(double x, std::int64_t terms) {
  if (!std::isfinite(x)) throw DomainError("cotangent_checks: non-finite x");
  const double dist = std::abs(x - std::nearbyint(x));
  if (dist < 1e-3) throw DomainError("cotangent_checks: x within 1e-3 of an integer");
  if (terms < 1) throw RangeError("cotangent_checks: terms must be >= 1");

  const double pi_cot = kPi * cos_pi(x) / sin_pi(x);
  std::vector<CheckResult> out;

  // (a) 1/x + 2x sum_{n<=N} 1/(x^2 - n^2); the omitted tail is at most 2|x|/(N - |x|).
  double sum = 0.0;
  for (std::int64_t n = terms; n >= 1; --n) {
    const double nd = static_cast<double>(n);
    sum += 1.0 / ((x - nd) * (x + nd));
  }
  const double partial = 1.0 / x + 2.0 * x * sum;
  const double tail = 2.0 * std::abs(x) / (static_cast<double>(terms) - std::abs(x));
  CheckResult a = asserted("cotangent/partial_fraction", partial, pi_cot, tail);
  a.input("x", x).input("terms", static_cast<long long>(terms));
  a.note("tolerance = tail bound 2|x|/(terms-|x|) of the symmetric partial sum");
  out.push_back(a);

  // (b) d/dx log sin(pi x) = pi cot(pi x)
  const double h = 1e-5;
  const double fd_log =
      (std::log(std::abs(sin_pi(x + h))) - std::log(std::abs(sin_pi(x - h)))) / (2.0 * h);
  CheckResult b = asserted("cotangent/log_sine_derivative", fd_log, pi_cot, 1e-5);
  b.input("x", x).input("h", h);
  out.push_back(b);

  // (c) d/dx A(1;x) = -pi cot(pi x), Analytic normalization
  const double xc = x - std::floor(x);
  const MasterFunctionConfig& cfg = default_calibration().config;
  const double fd_a = (analytic_A(1.0, CirclePoint(xc + h), cfg) -
                       analytic_A(1.0, CirclePoint(xc - h), cfg)) /
                      (2.0 * h);
  CheckResult c = asserted("cotangent/clausen_derivative", fd_a, -pi_cot, 1e-5);
  c.input("x", x).input("h", h).input("convention", to_string(Normalization::Analytic));
  c.note("A(1;x) from the calibrated master function");
  out.push_back(c);
  return out;
}

std::vector<CheckResult> weak_derivative_check(std::int64_t K) {
  if (K < 64) throw RangeError("weak_derivative_check: K must be >= 64");
  struct TestFunction {
    std::string name;
    FourierSeries series;
    double at_zero;
  };
  const std::int64_t modes = 2 * K;
  std::vector<TestFunction> fns;
  fns.push_back({"constant", FourierSeries::mode(modes, 0), 1.0});
  fns.push_back({"cos2pix", FourierSeries::cosine_mode(modes, 1), 1.0});
  {
    FourierSeries s2 = FourierSeries::mode(modes, 0);
    s2[0] = 0.5;
    s2[1] = -0.25;
    s2[-1] = -0.25;
    fns.push_back({"sin_squared", s2, 0.0});
  }
  {
    FourierSeries bump = gaussian_bump_series(0.1, 0.5, modes);
    const double at_zero = bump.evaluate(0.0).real();
    fns.push_back({"gaussian_bump", bump, at_zero});
  }
  fns.push_back({"exp_cos2pix",
                 FourierSeries::from_samples([](double x) { return std::exp(cos_pi(2.0 * x)); },
                                             modes, 4 * modes + 1),
                 std::exp(1.0)});

  const FourierSeries b1 = periodic_bernoulli_series(1, K);
  std::vector<CheckResult> out;
  for (const auto& fn : fns) {
    // -phi' truncated to |k| <= K
    FourierSeries neg_deriv(K);
    for (std::int64_t k = -K; k <= K; ++k) {
      neg_deriv[k] = -cplx(0.0, kTwoPi * static_cast<double>(k)) * fn.series[k];
    }
    const double lhs = b1.pairing(neg_deriv).real();
    const double rhs = fn.series[0].real() - fn.at_zero;
    const CombPairing comb = comb_pair(fn.series, K);
    CheckResult r = asserted("weak_derivative/" + fn.name, lhs, rhs, comb.tail_bound + 1e-12);
    r.input("K", static_cast<long long>(K)).input("phi", fn.name);
    r.note("<B(1;.), -phi'> vs int phi - phi(0); tolerance = comb tail bound + 1e-12 rounding");
    out.push_back(r);
  }
  return out;
}

std::vector<CheckResult> quarter_rotation_checks(std::int64_t K, std::uint64_t seed) {
  if (K < 8) throw RangeError("quarter_rotation_checks: K must be >= 8");
  detail::Rng rng(seed);
  FourierSeries f(K);
  for (std::int64_t k = 1; k <= K; ++k) {
    const cplx c(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    f[k] = c;
    f[-k] = std::conj(c);
  }
  const double t = rng.uniform(-1.0, 1.0);

  auto max_diff = [](const FourierSeries& a, const FourierSeries& b) {
    double m = 0.0;
    for (std::int64_t k = -a.K(); k <= a.K(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
    return m;
  };
  auto exact = [&](const std::string& name, const FourierSeries& lhs, const FourierSeries& rhs) {
    const bool equal = lhs == rhs;
    CheckResult r = asserted(name, max_diff(lhs, rhs), 0.0, 0.0);
    r.pass = equal;
    r.input("K", static_cast<long long>(K)).input("seed", static_cast<long long>(seed));
    r.note("exact coefficient equality; lhs = max |difference|");
    return r;
  };

  std::vector<CheckResult> out;
  const FourierSeries hf = hilbert(f);
  const FourierSeries hhf = hilbert(hf);
  out.push_back(exact("quarter_rotation/H2_minus_identity", hhf, -1.0 * f));
  out.push_back(exact("quarter_rotation/H4_identity", hilbert(hilbert(hhf)), f));

  {
    const double nf = f.norm2();
    const double nh = hf.norm2();
    CheckResult r = asserted("quarter_rotation/norm_preserved", nh, nf, 0.0);
    r.pass = nh == nf;
    r.input("K", static_cast<long long>(K)).input("seed", static_cast<long long>(seed));
    r.note("exact equality of coefficient norms");
    out.push_back(r);
  }

  {
    CheckResult r = exact("quarter_rotation/commutes_with_translation", hilbert(translate(f, t)),
                          translate(hf, t));
    r.input("t", t);
    out.push_back(r);
  }

  bool modes_ok = true;
  bool twice_ok = true;
  double worst = 0.0;
  for (std::int64_t k = 1; k <= K; ++k) {
    const FourierSeries s = FourierSeries::sine_mode(K, k);
    const FourierSeries c = FourierSeries::cosine_mode(K, k);
    const FourierSeries hs = hilbert(s);
    modes_ok = modes_ok && (hs == -1.0 * c) && (hilbert(c) == s);
    twice_ok = twice_ok && (hilbert(hs) == -1.0 * s);
    worst = std::max({worst, max_diff(hs, -1.0 * c), max_diff(hilbert(c), s)});
  }
  {
    CheckResult r = asserted("quarter_rotation/sine_to_minus_cosine", worst, 0.0, 0.0);
    r.pass = modes_ok;
    r.input("K", static_cast<long long>(K));
    r.note("H sin = -cos and H cos = sin for k = 1..K, exact");
    out.push_back(r);
  }
  {
    CheckResult r = asserted("quarter_rotation/double_rotation_of_sine", twice_ok ? 0.0 : 1.0, 0.0, 0.0);
    r.pass = twice_ok;
    r.input("K", static_cast<long long>(K));
    r.note("H(H(sin)) = -sin for k = 1..K, exact");
    out.push_back(r);
  }
  return out;
}

}  // namespace umbral
