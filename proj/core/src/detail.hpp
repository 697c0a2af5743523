#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace umbral::detail {

// Fractional part of k * x, compensated for the rounding of the product.
inline double frac_product(double k, double x) {
  const double p = k * x;
  const double err = std::fma(k, x, -p);
  double f = (p - std::floor(p)) + err;
  f -= std::floor(f);
  return f;
}

inline double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Seeded generator with a distribution that does not depend on the standard
// library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // [0, 1) with 53 random bits
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace umbral::detail
