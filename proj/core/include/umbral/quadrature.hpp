#pragma once

#include <functional>
#include <vector>

namespace umbral {

enum class QuadratureMethod { GaussLegendre, TanhSinh };

struct QuadratureSpec {
  QuadratureMethod method = QuadratureMethod::GaussLegendre;
  /// Gauss-Legendre: node count. Tanh-sinh: node budget.
  int nodes = 64;
  /// Integrable endpoint singularity; requires TanhSinh.
  bool endpoint_singular = false;

  static QuadratureSpec gauss_legendre(int nodes) { return {QuadratureMethod::GaussLegendre, nodes, false}; }
  static QuadratureSpec tanh_sinh(int nodes = 2000) { return {QuadratureMethod::TanhSinh, nodes, true}; }
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
};

/// Gauss-Legendre nodes and weights on (0,1).
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const GaussRule& gauss_legendre_rule(int n);

/// int_0^1 f(x) dx. Throws NonFiniteSample if f is non-finite at an
/// interior node, DomainError on an invalid spec.
QuadratureResult integrate(const std::function<double(double)>& f, const QuadratureSpec& spec);

}  // namespace umbral
