#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "golden_values.hpp"
#include "umbral/errors.hpp"
#include "umbral/kernels.hpp"
#include "umbral/quadrature.hpp"
#include "umbral/verify.hpp"

using namespace umbral;

TEST(GaussLegendre, RuleSumsToOne) {
  const GaussRule& r = gauss_legendre_rule(64);
  double w = 0.0;
  for (double v : r.weights) w += v;
  EXPECT_NEAR(w, 1.0, 1e-15);
  EXPECT_EQ(r.nodes.size(), 64u);
}

TEST(GaussLegendre, SmoothIntegrand) {
  const QuadratureResult q = integrate([](double x) { return std::exp(x); }, QuadratureSpec::gauss_legendre(32));
  EXPECT_NEAR(q.value, std::exp(1.0) - 1.0, 1e-14);
  EXPECT_LE(std::abs(q.value - (std::exp(1.0) - 1.0)), std::max(q.error_estimate, 1e-15));
}

TEST(TanhSinh, LogSingularEndpoints) {
  const auto f = [](double x) { return std::log(2.0 * std::sin(kPi * x)); };
  const QuadratureResult q = integrate(f, QuadratureSpec::tanh_sinh());
  EXPECT_NEAR(q.value, 0.0, 1e-10);
  EXPECT_LE(q.evaluations, 2000);
  const QuadratureResult g = integrate([](double x) { return std::log(x); }, QuadratureSpec::tanh_sinh());
  EXPECT_NEAR(g.value, -1.0, 1e-10);
  EXPECT_LE(std::abs(g.value + 1.0), std::max(g.error_estimate, 1e-12));
}

TEST(Quadrature, Errors) {
  const auto bad = [](double x) { return x > 0.3 && x < 0.7 ? std::numeric_limits<double>::quiet_NaN() : 1.0; };
  EXPECT_THROW(integrate(bad, QuadratureSpec::gauss_legendre(16)), NonFiniteSample);
  QuadratureSpec spec = QuadratureSpec::gauss_legendre(16);
  spec.endpoint_singular = true;
  EXPECT_THROW(integrate([](double) { return 1.0; }, spec), DomainError);
  EXPECT_THROW(integrate([](double) { return 1.0; }, QuadratureSpec::gauss_legendre(0)), DomainError);
}

TEST(Orthogonality, QuadratureMatchesOracle) {
  for (const auto& row : golden::kOrthogonality) {
    const std::string kind = row.kind;
    const PairKind k = kind == "BB" ? PairKind::BB : (kind == "AA" ? PairKind::AA : PairKind::BA);
    const OrthogonalityEntry e = orthogonality_entry(row.n, row.m, k);
    EXPECT_NEAR(e.quadrature.value, row.value, std::max(1e-9 * std::abs(row.value), 1e-11))
        << kind << "[" << row.n << "," << row.m << "]";
    EXPECT_NEAR(e.fourier, row.value, 1e-15 + 1e-13 * std::abs(row.value))
        << kind << "[" << row.n << "," << row.m << "]";
  }
}

TEST(Orthogonality, AnchorAndOddVanishing) {
  const CheckResult anchor = orthogonality_check(1, 1, PairKind::BB);
  EXPECT_TRUE(anchor.pass);
  EXPECT_NEAR(anchor.lhs.real(), 1.0 / 12.0, 1e-12);
  EXPECT_TRUE(orthogonality_check(2, 3, PairKind::BB).pass);
  EXPECT_TRUE(orthogonality_check(1, 4, PairKind::AA).pass);
}

TEST(Orthogonality, MixedParityCrossTermIsTwiceTheTableConstant) {
  const OrthogonalityEntry e = orthogonality_entry(1, 2, PairKind::BA);
  EXPECT_NEAR(std::abs(e.quadrature.value) / std::abs(e.stated), 2.0, 1e-9);
  EXPECT_FALSE(orthogonality_check(1, 2, PairKind::BA).pass);
}

TEST(OddZeta, RecoversZeta3AndZeta5) {
  for (auto [n, m] : {std::pair{1, 2}, std::pair{2, 3}, std::pair{1, 4}}) {
    const CheckResult c = odd_zeta_extraction(n, m);
    EXPECT_TRUE(c.pass) << c.name;
    EXPECT_LE(c.abs_err, 1e-8);
  }
  EXPECT_THROW(odd_zeta_extraction(1, 3), DomainError);
}
