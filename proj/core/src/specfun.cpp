#include "umbral/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "umbral/errors.hpp"
#include "detail.hpp"

namespace umbral {

namespace {

using detail::frac_product;

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

constexpr double kHalfLogTwoPi = 0.918938533204672741780329736406;
constexpr double kLogTwoPi = 1.83787706640934548356065947281;
constexpr double kLog2 = 0.693147180559945309417232121458;
constexpr double kLogPi = 1.14472988584940017414342735135;
constexpr double kMaxLogDouble = 709.782712893384;
constexpr int kMaxBernoulli = 64;

bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

std::string show(cplx z) {
  std::ostringstream os;
  os.precision(17);
  if (z.imag() == 0.0) {
    os << z.real();
  } else {
    os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  }
  return os.str();
}

// base^{-s} for real base > 0.
cplx pow_neg(double base, cplx s) {
  const double lb = std::log(base);
  return std::polar(std::exp(-s.real() * lb), -s.imag() * lb);
}

// e^w - 1 without cancellation for small w.
cplx expm1c(cplx w) {
  const double a = w.real();
  const double b = w.imag();
  const double sh = std::sin(0.5 * b);
  return {std::expm1(a) * std::cos(b) - 2.0 * sh * sh, std::exp(a) * std::sin(b)};
}

// ---------------------------------------------------------------------------
// Gamma

// Godfrey's coefficients, g = 607/128, 15 terms.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3, -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5};

// Evaluated in extended precision: for |z| ~ 50 the exponent reaches a few
// hundred and double rounding there costs ~1e-13 relative in Gamma.
using lcplx = std::complex<long double>;

lcplx lanczos_log_gamma(lcplx z) {
  z -= 1.0L;
  lcplx acc = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    acc += static_cast<long double>(kLanczos[i]) / (z + static_cast<long double>(i));
  }
  const lcplx t = z + static_cast<long double>(kLanczosG) + 0.5L;
  return static_cast<long double>(kHalfLogTwoPi) + (z + 0.5L) * std::log(t) - t + std::log(acc);
}

lcplx log_gamma_ext(cplx z) {
  const lcplx zl(z.real(), z.imag());
  if (z.real() >= 0.5) return lanczos_log_gamma(zl);
  const cplx sp = sin_pi(z);
  return 1.14472988584940017414342735135L - std::log(lcplx(sp.real(), sp.imag())) -
         lanczos_log_gamma(1.0L - zl);
}

bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::nearbyint(z.real());
}

// ---------------------------------------------------------------------------
// Bernoulli numbers

double rational_to_double(const cpp_rational& q) {
  cpp_int num = boost::multiprecision::numerator(q);
  const cpp_int den = boost::multiprecision::denominator(q);
  if (num == 0) return 0.0;
  const bool negative = num < 0;
  if (negative) num = -num;

  // Quotient with at least 66 significant bits, remainder folded into a
  // sticky bit, then a single rounding in the uint64 -> double conversion.
  const long nb = static_cast<long>(boost::multiprecision::msb(num));
  const long db = static_cast<long>(boost::multiprecision::msb(den));
  const long shift = 66 - (nb - db);
  cpp_int quotient;
  cpp_int remainder;
  if (shift >= 0) {
    boost::multiprecision::divide_qr(cpp_int(num << shift), den, quotient, remainder);
  } else {
    boost::multiprecision::divide_qr(num, cpp_int(den << -shift), quotient, remainder);
  }
  const long qbits = static_cast<long>(boost::multiprecision::msb(quotient)) + 1;
  const long drop = qbits - 64;
  const cpp_int low = quotient & ((cpp_int(1) << drop) - 1);
  auto mantissa = static_cast<std::uint64_t>(quotient >> drop);
  if (low != 0 || remainder != 0) mantissa |= 1U;
  const double value =
      std::ldexp(static_cast<double>(mantissa), static_cast<int>(drop - shift));
  return negative ? -value : value;
}

const std::array<double, kMaxBernoulli + 1>& bernoulli_table() {
  static const std::array<double, kMaxBernoulli + 1> table = [] {
    // sum_{k=0}^{n} C(n+1, k) B_k = 0, which fixes B_1 = -1/2.
    std::array<cpp_rational, kMaxBernoulli + 1> exact;
    exact[0] = 1;
    for (int n = 1; n <= kMaxBernoulli; ++n) {
      cpp_rational acc = 0;
      cpp_int binom = 1;
      for (int k = 0; k < n; ++k) {
        acc += cpp_rational(binom) * exact[k];
        binom = binom * (n + 1 - k) / (k + 1);
      }
      exact[n] = -acc / (n + 1);
    }
    std::array<double, kMaxBernoulli + 1> out{};
    for (int n = 0; n <= kMaxBernoulli; ++n) out[n] = rational_to_double(exact[n]);
    return out;
  }();
  return table;
}

// B_{2j} / (2j)! for the Euler-Maclaurin correction terms.
const std::vector<double>& em_coefficients() {
  static const std::vector<double> coeffs = [] {
    std::vector<double> c(kMaxBernoulli / 2 + 1, 0.0);
    double fact = 1.0;
    for (int j = 1; j <= kMaxBernoulli / 2; ++j) {
      fact *= static_cast<double>(2 * j - 1) * static_cast<double>(2 * j);
      c[j] = bernoulli_table()[2 * j] / fact;
    }
    return c;
  }();
  return coeffs;
}

// ---------------------------------------------------------------------------
// Zeta functions

// zeta(s, a) by Euler-Maclaurin with the series start shifted by
// max(10, ceil|s|) integer steps.
cplx hurwitz_euler_maclaurin(cplx s, double a, const Precision& prec) {
  const long shift = std::max(10L, static_cast<long>(std::ceil(std::abs(s))));
  cplx head = 0.0;
  for (long k = shift - 1; k >= 0; --k) head += pow_neg(static_cast<double>(k) + a, s);

  const double w = static_cast<double>(shift) + a;
  const cplx w_ms = pow_neg(w, s);
  cplx sum = head + w * w_ms / (s - 1.0) + 0.5 * w_ms;

  const auto& coeffs = em_coefficients();
  const int order = std::min(prec.euler_maclaurin_order, kMaxBernoulli / 2);
  cplx rising = s;  // (s)_{2j-1}
  cplx w_pow = w_ms / w;
  const double inv_w2 = 1.0 / (w * w);
  for (int j = 1; j <= order; ++j) {
    const cplx term = coeffs[j] * rising * w_pow;
    sum += term;
    if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    rising *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j));
    w_pow *= inv_w2;
  }
  return sum;
}

// Borwein's accelerated alternating series for eta(s), Re s >= 1/2.
cplx eta_borwein(cplx s, int n) {
  std::vector<double> d(static_cast<std::size_t>(n) + 1);
  double term = 1.0;
  double acc = 1.0;
  d[0] = acc;
  for (int i = 1; i <= n; ++i) {
    term *= 4.0 * static_cast<double>(n + i - 1) * static_cast<double>(n - i + 1) /
            (static_cast<double>(2 * i) * static_cast<double>(2 * i - 1));
    acc += term;
    d[static_cast<std::size_t>(i)] = acc;
  }
  const double dn = d[static_cast<std::size_t>(n)];
  cplx sum = 0.0;
  for (int k = n - 1; k >= 0; --k) {
    const double weight = (dn - d[static_cast<std::size_t>(k)]) / dn;
    const cplx t = weight * pow_neg(static_cast<double>(k + 1), s);
    sum += (k % 2 == 0) ? t : -t;
  }
  return sum;
}

int borwein_terms(cplx s) {
  const double t = std::abs(s.imag());
  // |error| <= 3 (1 + 2|t|) e^{pi |t| / 2} / (3 + sqrt 8)^n
  const double log_err = std::log(3.0 * (1.0 + 2.0 * t)) + 0.5 * kPi * t;
  const double needed = (log_err + 18.0 * std::log(10.0)) / std::log(3.0 + std::sqrt(8.0));
  const int n = static_cast<int>(std::ceil(needed)) + 4;
  if (n > 380) {
    throw ConvergenceError("riemann_zeta: |Im s| too large for the eta acceleration (s=" +
                           show(s) + ")");
  }
  return std::max(n, 20);
}

cplx zeta_right_half(cplx s, const Precision& prec) {
  // 1 - 2^{1-s}
  const cplx denom = -expm1c((1.0 - s) * kLog2);
  if (std::abs(denom) < 1e-3) return hurwitz_euler_maclaurin(s, 1.0, prec);
  return eta_borwein(s, borwein_terms(s)) / denom;
}

// 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s)
cplx functional_factor(cplx s) {
  return std::exp(s * kLog2 + (s - 1.0) * kLogPi) * sin_pi(0.5 * s) * gamma(1.0 - s);
}

// ---------------------------------------------------------------------------
// Polylogarithm helpers

const std::vector<std::vector<double>>& eulerian_numbers() {
  static const std::vector<std::vector<double>> table = [] {
    constexpr int kMax = 64;
    std::vector<std::vector<double>> a(kMax + 1);
    a[0] = {1.0};
    for (int n = 1; n <= kMax; ++n) {
      a[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n), 0.0);
      const auto& prev = a[static_cast<std::size_t>(n - 1)];
      for (int k = 0; k < n; ++k) {
        double v = 0.0;
        if (k < static_cast<int>(prev.size())) v += (k + 1) * prev[static_cast<std::size_t>(k)];
        if (k >= 1) v += (n - k) * prev[static_cast<std::size_t>(k - 1)];
        a[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = v;
      }
    }
    return a;
  }();
  return table;
}

// Li_{-n}(z) = z sum_k A(n,k) z^k / (1-z)^{n+1}, n >= 1.
cplx polylog_negative_integer(int n, cplx z, cplx one_minus_z) {
  const auto& row = eulerian_numbers()[static_cast<std::size_t>(n)];
  cplx horner = 0.0;
  for (auto it = row.rbegin(); it != row.rend(); ++it) horner = horner * z + *it;
  return z * horner / std::pow(one_minus_z, n + 1);
}

std::int64_t direct_terms_needed(cplx s, double boundary_distance) {
  const double k = std::ceil(2.0 * (std::abs(s) + 40.0) / (kPi * boundary_distance));
  if (!(k < 9.0e18)) return std::numeric_limits<std::int64_t>::max();
  return std::max<std::int64_t>(16, static_cast<std::int64_t>(k));
}

cplx polylog_order_one(CirclePoint x) {
  // -log(1 - e^{2 pi i x}) = -log(2 sin pi x) + i pi (1/2 - x)
  return {-std::log(2.0 * sin_pi(x.x())), kPi * (0.5 - x.x())};
}

cplx polylog_order_zero(CirclePoint x) {
  // z / (1 - z) = -1/2 + (i/2) cot(pi x)
  return {-0.5, 0.5 * cos_pi(x.x()) / sin_pi(x.x())};
}

double zeta_at_integer(long j) {
  if (j >= 2) return zeta_right_half(cplx(static_cast<double>(j)), Precision{}).real();
  if (j == 1) throw PoleError("pole at s=1");
  const long n = -j;
  if (n + 1 > kMaxBernoulli) throw RangeError("zeta at integer below -63");
  const double b = bernoulli_table()[static_cast<std::size_t>(n + 1)];
  return ((n % 2 == 0) ? b : -b) / static_cast<double>(n + 1);
}

}  // namespace

// ---------------------------------------------------------------------------

void Precision::validate() const {
  if (!(rel_tol >= 1e-15) || !std::isfinite(rel_tol)) {
    throw DomainError("Precision: rel_tol must be >= 1e-15");
  }
  if (max_terms <= 0) throw DomainError("Precision: max_terms must be positive");
  if (euler_maclaurin_order <= 0 || euler_maclaurin_order % 2 != 0) {
    throw DomainError("Precision: euler_maclaurin_order must be a positive even integer");
  }
}

AnalyticOrder::AnalyticOrder(double s) : AnalyticOrder(cplx(s)) {}

AnalyticOrder::AnalyticOrder(cplx s) : value_(s) {
  if (!is_finite(s)) throw DomainError("analytic order must be finite, got " + show(s));
}

bool AnalyticOrder::is_integer(long* n) const {
  if (value_.imag() != 0.0) return false;
  const double r = value_.real();
  if (r != std::nearbyint(r) || std::abs(r) > 1e15) return false;
  if (n != nullptr) *n = static_cast<long>(r);
  return true;
}

CirclePoint::CirclePoint(double x) : x_(x) {
  if (!(x > 0.0 && x < 1.0)) {
    throw DomainError("circle point must lie in the open interval (0,1), got " + show(x));
  }
}

double CirclePoint::boundary_distance() const { return std::min(x_, 1.0 - x_); }

double sin_pi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  double r = std::fmod(x, 2.0);
  if (r > 1.0) {
    r -= 2.0;
  } else if (r < -1.0) {
    r += 2.0;
  }
  double sign = 1.0;
  if (r < 0.0) {
    r = -r;
    sign = -1.0;
  }
  if (r > 0.5) r = 1.0 - r;
  if (r == 0.0) return 0.0;
  return sign * std::sin(kPi * r);
}

double cos_pi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  double r = std::fmod(std::abs(x), 2.0);
  if (r > 1.0) r = 2.0 - r;
  return sin_pi(0.5 - r);
}

cplx unit_phase(double t) { return {cos_pi(2.0 * t), sin_pi(2.0 * t)}; }

cplx sin_pi(cplx z) {
  const double y = kPi * z.imag();
  return {sin_pi(z.real()) * std::cosh(y), cos_pi(z.real()) * std::sinh(y)};
}

cplx cos_pi(cplx z) {
  const double y = kPi * z.imag();
  return {cos_pi(z.real()) * std::cosh(y), -sin_pi(z.real()) * std::sinh(y)};
}

cplx log_gamma(cplx z) {
  if (!is_finite(z)) throw DomainError("log_gamma: non-finite argument");
  if (is_nonpositive_integer(z)) throw PoleError("gamma: pole at z=" + show(z));
  const lcplx lg = log_gamma_ext(z);
  return {static_cast<double>(lg.real()), static_cast<double>(lg.imag())};
}

cplx gamma(cplx z) {
  if (!is_finite(z)) throw DomainError("gamma: non-finite argument");
  if (is_nonpositive_integer(z)) throw PoleError("gamma: pole at z=" + show(z));
  const lcplx lg = log_gamma_ext(z);
  if (lg.real() > kMaxLogDouble) {
    throw OverflowError("gamma: |Gamma(z)| exceeds the double range at z=" + show(z));
  }
  const lcplx g = std::exp(lg);
  return {static_cast<double>(g.real()), static_cast<double>(g.imag())};
}

double gamma(double x) { return gamma(cplx(x)).real(); }

double bernoulli_number(int n) {
  if (n < 0 || n > kMaxBernoulli) {
    throw RangeError("bernoulli_number: n must be in [0, 64], got " + std::to_string(n));
  }
  return bernoulli_table()[static_cast<std::size_t>(n)];
}

cplx riemann_zeta(AnalyticOrder order, const Precision& prec) {
  prec.validate();
  const cplx s = order.value();
  if (s == cplx(1.0)) throw PoleError("pole at s=1");
  if (s == cplx(0.0)) return -0.5;
  if (s.real() >= 0.5) return zeta_right_half(s, prec);
  return functional_factor(s) * zeta_right_half(1.0 - s, prec);
}

cplx hurwitz_zeta(AnalyticOrder order, double a, const Precision& prec) {
  prec.validate();
  if (!(a > 0.0 && a <= 1.0)) {
    throw DomainError("hurwitz_zeta: a must lie in (0,1], got " + show(a));
  }
  const cplx s = order.value();
  if (s == cplx(1.0)) throw PoleError("pole at s=1");
  if (s.real() >= -0.5) return hurwitz_euler_maclaurin(s, a, prec);

  if (a == 1.0) {
    return functional_factor(s) * hurwitz_euler_maclaurin(1.0 - s, 1.0, prec);
  }

  const double dist = std::min(a, 1.0 - a);
  if (dist < 1e-3) {
    // Taylor series about a = 1:
    //   zeta(s, 1 + delta) = sum_j (-delta)^j (s)_j / j! zeta(s + j)
    const double delta = (a < 0.5) ? a : a - 1.0;
    cplx sum = (a < 0.5) ? pow_neg(a, s) : cplx(0.0);
    cplx coef = 1.0;
    int small_terms = 0;
    for (int j = 0; j < 400; ++j) {
      if (j > 0) coef *= -delta * (s + static_cast<double>(j - 1)) / static_cast<double>(j);
      if (coef == cplx(0.0)) return sum;
      const cplx term = coef * hurwitz_zeta(s + static_cast<double>(j), 1.0, prec);
      sum += term;
      small_terms = (std::abs(term) <= 1e-18 * std::abs(sum)) ? small_terms + 1 : 0;
      if (small_terms >= 2) return sum;
    }
    throw ConvergenceError("hurwitz_zeta: Taylor series about a=1 did not converge");
  }

  // Hurwitz formula with w = 1 - s, Re w > 1.5:
  //   zeta(1-w, a) = Gamma(w)/(2pi)^w [e^{-i pi w/2} Li_w(e^{2 pi i a})
  //                                    + e^{i pi w/2} Li_w(e^{-2 pi i a})]
  const cplx w = 1.0 - s;
  const cplx li_plus = polylog_circle_direct(w, CirclePoint(a), prec).value;
  const cplx li_minus = polylog_circle_direct(w, CirclePoint(1.0 - a), prec).value;
  const cplx phase = std::exp(cplx(0.0, 0.5 * kPi) * w);
  return gamma(w) * std::exp(-w * kLogTwoPi) * (li_plus / phase + phase * li_minus);
}

cplx hurwitz_zeta_from(AnalyticOrder order, double a, std::int64_t start, const Precision& prec) {
  prec.validate();
  const cplx s = order.value();
  if (!(a > 0.0) || !std::isfinite(a) || start < 0) {
    throw DomainError("hurwitz_zeta_from: need a > 0 and start >= 0");
  }
  if (s == cplx(1.0)) throw PoleError("pole at s=1");
  if (s.real() < -0.5) throw DomainError("hurwitz_zeta_from: Re s must be >= -1/2");
  return hurwitz_euler_maclaurin(s, a + static_cast<double>(start), prec);
}

SeriesValue polylog_circle_direct(AnalyticOrder order, CirclePoint x, const Precision& prec) {
  prec.validate();
  const cplx s = order.value();
  const double xv = x.x();
  std::int64_t terms = direct_terms_needed(s, x.boundary_distance());

  const cplx z = unit_phase(xv);
  // 1 - z = 2 sin(pi x) e^{i pi (x - 1/2)}
  const cplx one_minus_z = std::polar(2.0 * sin_pi(xv), kPi * (xv - 0.5));

  for (;;) {
    if (terms > prec.max_terms) {
      throw ConvergenceError("polylog_circle: direct series needs " + std::to_string(terms) +
                             " terms (max_terms=" + std::to_string(prec.max_terms) +
                             ") at s=" + show(s) + ", x=" + show(xv));
    }
    cplx partial = 0.0;
    for (std::int64_t k = terms - 1; k >= 1; --k) {
      const double kd = static_cast<double>(k);
      const double lk = std::log(kd);
      const double phase = kTwoPi * frac_product(kd, xv) - s.imag() * lk;
      partial += std::polar(std::exp(-s.real() * lk), phase);
    }

    // sum_{k>=K} z^k k^{-s} = z^K K^{-s} sum_n C(-s, n) K^{-n} Li_{-n}(z)
    const double kd = static_cast<double>(terms);
    const cplx lead = unit_phase(frac_product(kd, xv)) * pow_neg(kd, s);
    cplx expansion = 1.0 / one_minus_z;
    cplx coef = 1.0;
    double last = std::abs(expansion);
    double bound = last;
    for (int n = 1; n <= 60; ++n) {
      coef *= -(s + static_cast<double>(n - 1)) / (static_cast<double>(n) * kd);
      const cplx term = coef * polylog_negative_integer(n, z, one_minus_z);
      const double mag = std::abs(term);
      if (mag == 0.0) continue;  // Li_{-n}(-1) = 0 for even n
      if (mag > last && n > 2) break;  // asymptotic series turned around
      expansion += term;
      last = mag;
      bound = mag;
      if (mag <= 1e-18 * std::abs(expansion)) break;
    }
    const cplx tail = lead * expansion;
    const double tail_bound = std::abs(lead) * bound;
    const cplx value = partial + tail;
    if (tail_bound <= 1e-3 * prec.rel_tol * std::abs(value) || tail_bound <= 1e-300) {
      return {value, tail_bound, terms};
    }
    terms *= 2;
  }
}

cplx polylog_circle_hurwitz(AnalyticOrder order, CirclePoint x, const Precision& prec) {
  prec.validate();
  const cplx w = 1.0 - order.value();
  const cplx zeta_x = hurwitz_zeta(w, x.x(), prec);
  const cplx zeta_1mx = hurwitz_zeta(w, 1.0 - x.x(), prec);
  // i^{w} = e^{i pi w / 2} on the principal branch
  const cplx phase = std::exp(cplx(0.0, 0.5 * kPi) * w);
  return gamma(w) * std::exp(-w * kLogTwoPi) * (phase * zeta_x + zeta_1mx / phase);
}

cplx polylog_circle_integer(int m, CirclePoint x) {
  if (m < 1 || m > kMaxBernoulli) {
    throw RangeError("polylog_circle_integer: order must be in [1, 64]");
  }
  if (m == 1) return polylog_order_one(x);
  if (x.x() > 0.5) return std::conj(polylog_circle_integer(m, x.reflected()));

  // Li_m(e^mu) = mu^{m-1}/(m-1)! (H_{m-1} - log(-mu)) + sum_{k != m-1} zeta(m-k) mu^k / k!
  const cplx mu(0.0, kTwoPi * x.x());
  const cplx log_minus_mu(std::log(kTwoPi * x.x()), -0.5 * kPi);
  double harmonic = 0.0;
  for (int i = 1; i < m; ++i) harmonic += 1.0 / i;

  cplx sum = 0.0;
  cplx power = 1.0;  // mu^k / k!
  const int k_max = m + kMaxBernoulli - 1;
  for (int k = 0; k <= k_max; ++k) {
    cplx term;
    if (k == m - 1) {
      term = power * (harmonic - log_minus_mu);
    } else {
      term = power * zeta_at_integer(m - k);
    }
    sum += term;
    power *= mu / static_cast<double>(k + 1);
  }
  return sum;
}

cplx polylog_circle(AnalyticOrder order, CirclePoint x, const Precision& prec) {
  prec.validate();
  const cplx s = order.value();
  const double dist = x.boundary_distance();
  if (s.real() <= 1.0 && dist < 1e-9) {
    throw DomainError("polylog_circle: x within 1e-9 of the singular point z=1 for Re s <= 1");
  }

  long n = 0;
  if (order.is_integer(&n)) {
    if (n == 1) return polylog_order_one(x);
    if (n == 0) return polylog_order_zero(x);
  }

  const bool direct_feasible = direct_terms_needed(s, dist) <= prec.max_terms;

  if (s.real() > 1.5) {
    if (direct_feasible) return polylog_circle_direct(order, x, prec).value;
    if (n >= 2 && n <= kMaxBernoulli && order.is_integer()) return polylog_circle_integer(static_cast<int>(n), x);
    const double to_int = std::abs(s - std::round(s.real()));
    if (to_int > 1e-3) return polylog_circle_hurwitz(order, x, prec);
    throw ConvergenceError("polylog_circle: no well-conditioned route at s=" + show(s) +
                           ", x=" + show(x.x()));
  }

  const bool near_removable = std::abs(s) < 0.05 || std::abs(s - 1.0) < 0.05;
  if (near_removable && direct_feasible) return polylog_circle_direct(order, x, prec).value;
  return polylog_circle_hurwitz(order, x, prec);
}

}  // namespace umbral
