#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "close.hpp"
#include "golden_values.hpp"
#include "umbral/errors.hpp"
#include "umbral/kernels.hpp"
#include "umbral/specfun.hpp"

using namespace umbral;

TEST(Gamma, MatchesOracle) {
  for (const auto& row : golden::kGamma) {
    EXPECT_TRUE(Close(gamma(row.z), row.value, 1e-13)) << "z = " << row.z;
  }
}

TEST(Gamma, RealOverloadAndReflection) {
  EXPECT_NEAR(umbral::gamma(5.0), 24.0, 24.0 * 1e-14);
  EXPECT_NEAR(umbral::gamma(0.5), std::sqrt(kPi), 1e-15);
  const cplx z(0.3, 1.7);
  EXPECT_TRUE(Close(gamma(z) * gamma(1.0 - z), kPi / sin_pi(z), 1e-13));
}

TEST(Gamma, PolesAndOverflow) {
  EXPECT_THROW(gamma(cplx(0.0)), PoleError);
  EXPECT_THROW(gamma(cplx(-3.0)), PoleError);
  EXPECT_THROW(gamma(cplx(200.0)), OverflowError);
}

TEST(Gamma, ConjugateSymmetry) {
  const cplx z(-2.3, 4.1);
  EXPECT_TRUE(Close(gamma(std::conj(z)), std::conj(gamma(z)), 1e-15));
}

TEST(BernoulliNumber, MatchesOracle) {
  for (const auto& row : golden::kBernoulliNumber) {
    EXPECT_TRUE(Close(bernoulli_number(row.n), row.value, 1e-16)) << "n = " << row.n;
  }
  EXPECT_EQ(bernoulli_number(7), 0.0);
  EXPECT_THROW(bernoulli_number(65), RangeError);
  EXPECT_THROW(bernoulli_number(-1), RangeError);
}

TEST(RiemannZeta, MatchesOracle) {
  for (const auto& row : golden::kZeta) {
    EXPECT_TRUE(Close(riemann_zeta(row.s), row.value, 1e-12, 1e-14)) << "s = " << row.s;
  }
}

TEST(RiemannZeta, NegativeIntegersMatchBernoulli) {
  for (int n = 1; n <= 20; ++n) {
    const double want = -bernoulli_number(n + 1) / (n + 1);
    EXPECT_TRUE(Close(riemann_zeta(-static_cast<double>(n)), want, 1e-12, 1e-300)) << "n = " << n;
  }
  EXPECT_EQ(riemann_zeta(-2.0), cplx(0.0));
  EXPECT_EQ(riemann_zeta(-10.0), cplx(0.0));
}

TEST(RiemannZeta, PoleAtOne) { EXPECT_THROW(riemann_zeta(1.0), PoleError); }

TEST(HurwitzZeta, MatchesOracle) {
  for (const auto& row : golden::kHurwitz) {
    EXPECT_TRUE(Close(hurwitz_zeta(row.s, row.a), row.value, 1e-11)) << "s = " << row.s << " a = " << row.a;
  }
}

TEST(HurwitzZeta, AtOneIsRiemann) {
  for (cplx s : {cplx(2.0), cplx(0.5, 3.0), cplx(-3.5, 1.0), cplx(7.0, -2.0)}) {
    EXPECT_TRUE(Close(hurwitz_zeta(s, 1.0), riemann_zeta(s), 1e-12)) << "s = " << s;
  }
}

TEST(HurwitzZeta, Errors) {
  EXPECT_THROW(hurwitz_zeta(1.0, 0.5), PoleError);
  EXPECT_THROW(hurwitz_zeta(2.0, 0.0), DomainError);
  EXPECT_THROW(hurwitz_zeta(2.0, 1.5), DomainError);
}

TEST(HurwitzZeta, FromStartDescends) {
  const cplx s(2.5, 1.0);
  const double a = 0.3;
  const cplx head = std::pow(cplx(a), -s) + std::pow(cplx(a + 1.0), -s);
  EXPECT_TRUE(Close(hurwitz_zeta_from(s, a, 2), hurwitz_zeta(s, a) - head, 1e-11));
  EXPECT_THROW(hurwitz_zeta_from(s, a, -1), DomainError);
  EXPECT_THROW(hurwitz_zeta_from(-2.0, a, 0), DomainError);
}

TEST(Polylog, MatchesOracle) {
  for (const auto& row : golden::kPolylog) {
    EXPECT_TRUE(Close(polylog_circle(row.s, CirclePoint(row.x)), row.value, 1e-11, 1e-15))
        << "s = " << row.s << " x = " << row.x;
  }
}

TEST(Polylog, RoutesAgreeInOverlapStrip) {
  for (double re : {1.6, 2.2, 2.9}) {
    for (double x : {0.13, 0.5, 0.71}) {
      const cplx s(re, 0.7);
      const SeriesValue direct = polylog_circle_direct(s, CirclePoint(x));
      const cplx hurwitz = polylog_circle_hurwitz(s, CirclePoint(x));
      EXPECT_TRUE(Close(direct.value, hurwitz, 1e-9)) << "s = " << s << " x = " << x;
    }
  }
}

TEST(Polylog, IntegerOrderClosedForms) {
  // Li_2(e^{i pi/2}) = -pi^2/48 + i G
  const cplx li2 = polylog_circle_integer(2, CirclePoint(0.25));
  EXPECT_TRUE(Close(li2, cplx(-kPi * kPi / 48.0, golden::kCatalanOverPiSq * kPi * kPi), 1e-14));
  // Li_1(e^{2 pi i x}) = -log(2 sin pi x) + i pi (1/2 - x)
  const cplx li1 = polylog_circle(1.0, CirclePoint(0.2));
  EXPECT_TRUE(Close(li1, cplx(-std::log(2.0 * std::sin(kPi * 0.2)), kPi * 0.3), 1e-13));
}

TEST(Polylog, ZeroTermAtHalfTurnIsSkipped) {
  const SeriesValue v = polylog_circle_direct(2.0, CirclePoint(0.5));
  EXPECT_TRUE(Close(v.value, cplx(-kPi * kPi / 12.0), 1e-13));
}

TEST(Polylog, ConjugateSymmetry) {
  const cplx s(2.2, 1.3);
  const CirclePoint x(0.37);
  EXPECT_TRUE(Close(polylog_circle(std::conj(s), x.reflected()), std::conj(polylog_circle(s, x)), 1e-13));
}

TEST(Polylog, Errors) {
  Precision tight;
  tight.max_terms = 10;
  EXPECT_THROW(polylog_circle_direct(1.2, CirclePoint(0.3), tight), ConvergenceError);
  EXPECT_THROW(CirclePoint(0.0), DomainError);
  EXPECT_THROW(CirclePoint(1.0), DomainError);
  EXPECT_THROW(CirclePoint(std::numeric_limits<double>::quiet_NaN()), DomainError);
}

TEST(AnalyticOrder, RejectsNonFinite) {
  EXPECT_THROW(AnalyticOrder(std::numeric_limits<double>::infinity()), DomainError);
  EXPECT_THROW(AnalyticOrder(cplx(1.0, std::numeric_limits<double>::quiet_NaN())), DomainError);
  long n = 0;
  EXPECT_TRUE(AnalyticOrder(4.0).is_integer(&n));
  EXPECT_EQ(n, 4);
  EXPECT_FALSE(AnalyticOrder(cplx(4.0, 1.0)).is_integer());
}

TEST(Precision, Validate) {
  Precision p;
  EXPECT_NO_THROW(p.validate());
  p.rel_tol = 1e-16;
  EXPECT_THROW(p.validate(), DomainError);
  p = Precision{};
  p.euler_maclaurin_order = 3;
  EXPECT_THROW(p.validate(), DomainError);
  p = Precision{};
  p.max_terms = 0;
  EXPECT_THROW(p.validate(), DomainError);
}

TEST(SinPi, ExactZeros) {
  EXPECT_EQ(sin_pi(3.0), 0.0);
  EXPECT_EQ(cos_pi(2.5), 0.0);
  EXPECT_EQ(unit_phase(0.25), cplx(0.0, 1.0));
}
