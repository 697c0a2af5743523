#include <cmath>

#include <gtest/gtest.h>

#include "close.hpp"
#include "golden_values.hpp"
#include "umbral/errors.hpp"
#include "umbral/kernels.hpp"

using namespace umbral;

TEST(BernoulliPoly, MatchesOracle) {
  for (const auto& row : golden::kBernoulliPoly) {
    EXPECT_TRUE(Close(bernoulli_poly(row.n, row.x), row.value, 1e-12, 1e-15)) << "n = " << row.n;
  }
  EXPECT_EQ(bernoulli_poly(0, 0.3), 1.0);
  EXPECT_THROW(bernoulli_poly(65, 0.5), RangeError);
}

TEST(PeriodicBernoulli, AgreesWithPolynomialWithinTail) {
  for (int n = 1; n <= 8; ++n) {
    for (double x : {0.1, 0.25, 0.5, 0.8}) {
      const KernelValue v = periodic_bernoulli(n, CirclePoint(x), 20000);
      const double want = bernoulli_poly(n, x);
      EXPECT_LE(std::abs(v.value - want), v.tail_bound + 1e-14) << "n = " << n << " x = " << x;
    }
  }
  EXPECT_NEAR(periodic_bernoulli(3, CirclePoint(0.25), 100000).value, 3.0 / 64.0, 1e-12);
}

TEST(PeriodicBernoulli, ExactRoute) {
  EXPECT_NEAR(periodic_bernoulli_exact(2, CirclePoint(0.5)), -1.0 / 12.0, 1e-15);
  EXPECT_NEAR(periodic_bernoulli_exact(5, CirclePoint(0.3)), bernoulli_poly(5, 0.3), 1e-15);
}

TEST(PeriodicBernoulli, ParityAndZeroMean) {
  const std::int64_t K = 64;
  for (int n = 1; n <= 6; ++n) {
    const FourierSeries f = periodic_bernoulli_series(n, K);
    EXPECT_EQ(f[0], cplx(0.0));
    EXPECT_TRUE(f.is_real());
    const double x = 0.3;
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    EXPECT_NEAR(f.evaluate(1.0 - x).real(), sign * f.evaluate(x).real(), 1e-15);
  }
}

TEST(ClausenDual, MatchesOracleInDualConvention) {
  for (const auto& row : golden::kClausenDual) {
    const double exact = clausen_dual_exact(row.m, CirclePoint(row.x), Normalization::Dual);
    EXPECT_TRUE(Close(exact, row.value, 1e-12, 1e-15)) << "m = " << row.m << " x = " << row.x;
    const KernelValue series = clausen_dual(row.m, CirclePoint(row.x), 100000, Normalization::Dual);
    EXPECT_LE(std::abs(series.value - row.value), series.tail_bound + 1e-14) << "m = " << row.m;
  }
}

TEST(ClausenDual, AnalyticIsPiTimesDual) {
  EXPECT_NEAR(normalization_factor(), kPi, 0.0);
  for (int m = 1; m <= 5; ++m) {
    const CirclePoint x(0.37);
    EXPECT_NEAR(clausen_dual_exact(m, x, Normalization::Analytic),
                kPi * clausen_dual_exact(m, x, Normalization::Dual), 1e-14);
  }
  EXPECT_NEAR(clausen_dual_exact(1, CirclePoint(0.5), Normalization::Analytic), -std::log(2.0), 1e-15);
}

TEST(ClausenDual, LogSingularityRejected) {
  EXPECT_THROW(clausen_dual(1, CirclePoint(1e-14), 1000, Normalization::Dual), DomainError);
}

TEST(MasterFunction, CalibratedMatchesOracle) {
  const MasterFunctionConfig cfg = default_calibration().config;
  for (const auto& row : golden::kMasterCalibrated) {
    EXPECT_TRUE(Close(master_F(row.s, CirclePoint(row.x), cfg), row.value, 1e-11)) << "s = " << row.s;
  }
}

TEST(MasterFunction, LiteralMatchesOracle) {
  for (const auto& row : golden::kMasterLiteral) {
    EXPECT_TRUE(Close(master_F(row.s, CirclePoint(row.x), MasterFunctionConfig::literal()), row.value,
                      1e-11));
  }
}

TEST(MasterFunction, BaseCases) {
  const MasterFunctionConfig cfg = default_calibration().config;
  EXPECT_NEAR(analytic_B(1.0, CirclePoint(0.75), cfg), 0.25, 1e-12);
  EXPECT_NEAR(analytic_A(1.0, CirclePoint(0.5), cfg), -std::log(2.0), 1e-12);
  for (int n = 2; n <= 6; ++n) {
    EXPECT_NEAR(analytic_B(static_cast<double>(n), CirclePoint(0.3), cfg), bernoulli_poly(n, 0.3), 1e-8)
        << "n = " << n;
  }
}

TEST(Calibration, SelectsUniqueConfig) {
  const CalibrationRecord& rec = default_calibration();
  EXPECT_EQ(rec.candidates.size(), 8u);
  EXPECT_EQ(rec.config.phase_sign, -1);
  EXPECT_EQ(rec.config.overall_sign, -1);
  EXPECT_DOUBLE_EQ(rec.config.a_prefactor, -kPi);
  EXPECT_LE(rec.residual, 1e-8);
  EXPECT_EQ(calibrate_master(default_anchors()).config, rec.config);
}

TEST(Calibration, ContradictoryAnchorsThrow) {
  std::vector<Anchor> anchors = default_anchors();
  for (auto& a : anchors) a.expected += 1.0;
  EXPECT_THROW(calibrate_master(anchors), CalibrationError);
}

TEST(Hasse, IntegerAnchors) {
  const MasterFunctionConfig cfg = default_calibration().config;
  for (int s : {2, 3, 4, 6, 8}) {
    const CheckResult c = hasse_check(static_cast<double>(s), cfg);
    EXPECT_TRUE(c.pass) << c.name << " " << c.abs_err;
  }
  const CheckResult two = hasse_check(2.0, cfg);
  EXPECT_NEAR(two.rhs.real(), 1.0 / 6.0, 1e-15);
}

TEST(Hasse, ComplexOrderRoutesAgree) {
  const MasterFunctionConfig cfg = default_calibration().config;
  const CheckResult c = hasse_check(cplx(3.3, -2.1), cfg);
  EXPECT_TRUE(c.pass);
  EXPECT_LE(c.abs_err, 1e-9);
}

TEST(Hermite, RecurrenceAndGeneratingFunction) {
  EXPECT_EQ(hermite_poly(0, 1.7), 1.0);
  EXPECT_DOUBLE_EQ(hermite_poly(2, 1.0), 2.0);
  EXPECT_DOUBLE_EQ(hermite_poly(3, 0.5), -5.0);
  for (int m = 0; m <= 12; ++m) {
    EXPECT_TRUE(Close(hermite_from_genfun(m, 0.3), hermite_poly(m, 0.3), 1e-8, 1e-10)) << "m = " << m;
  }
  EXPECT_THROW(hermite_poly(201, 1.0), RangeError);
}

TEST(Hermite, RootsMatchOracle) {
  const std::vector<double> roots = hermite_roots(5);
  ASSERT_EQ(roots.size(), 5u);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    EXPECT_NEAR(roots[i], golden::kHermiteRoots5[i], 1e-14);
  }
}

TEST(Correspondence, MatchesOracle) {
  for (const auto& row : golden::kCorrespondence) {
    EXPECT_TRUE(Close(correspondence_constant(row.n), row.value, 1e-13)) << "n = " << row.n;
  }
  EXPECT_THROW(correspondence_constant(0), DomainError);
}
