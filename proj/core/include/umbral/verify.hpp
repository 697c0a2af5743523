#pragma once

// Identity-check suites. Each suite returns a canonicalized report whose
// checks are named "<suite>/<check>".

#include <cstdint>
#include <string>
#include <vector>

#include "umbral/kernels.hpp"
#include "umbral/quadrature.hpp"
#include "umbral/report.hpp"

namespace umbral {

struct SuiteOptions {
  std::uint64_t seed = 7;
  Precision precision;
  /// Truncation override for the Fourier-series checks; 0 keeps each
  /// check's default.
  std::int64_t trunc_K = 0;
  int fock_N = 60;
};

enum class PairKind { BB, AA, BA };

const char* to_string(PairKind kind);

struct OrthogonalityEntry {
  int n = 0;
  int m = 0;
  PairKind kind = PairKind::BB;
  Normalization conv = Normalization::Dual;
  QuadratureResult quadrature;
  /// Value stated by the orthogonality table (magnitudes are compared).
  double stated = 0.0;
  /// Signed value from the Fourier coefficients of the kernels.
  double fourier = 0.0;
};

/// int_0^1 K_n K_m dx for kernels evaluated in closed form.
OrthogonalityEntry orthogonality_entry(int n, int m, PairKind kind,
                                       Normalization conv = Normalization::Dual);

/// Magnitude of the quadrature vs the stated closed form (zero entries are
/// compared absolutely at 1e-9, non-zero relatively at 1e-8).
CheckResult orthogonality_check(int n, int m, PairKind kind,
                                Normalization conv = Normalization::Dual);

/// zeta(n+m) recovered from int B~_n A_m, n+m odd.
CheckResult odd_zeta_extraction(int n, int m);

VerificationReport specfun_suite(const SuiteOptions& opts = {});
VerificationReport kernels_suite(const SuiteOptions& opts = {});
VerificationReport operators_suite(const SuiteOptions& opts = {});
VerificationReport orthogonality_suite(int max_order = 5, const SuiteOptions& opts = {});
VerificationReport correspondence_suite(int n_max = 4, const SuiteOptions& opts = {});
VerificationReport ladder_suite(int samples = 200, const SuiteOptions& opts = {});
VerificationReport fractional_suite(const std::vector<double>& alphas = {0.5, 1.0, 1.5, 2.0},
                                    int samples = 6, const SuiteOptions& opts = {});
/// Calibration record, literal-form measurements and the other
/// measurement-only entries.
VerificationReport measurements_suite(const SuiteOptions& opts = {});

/// Every suite, run concurrently and merged canonically.
VerificationReport full_report(const SuiteOptions& opts = {});

/// Suite by CLI name: all, specfun, kernels, operators, orthogonality,
/// correspondence, ladder, fractional. Throws DomainError otherwise.
VerificationReport run_suite(const std::string& name, const SuiteOptions& opts = {});
const std::vector<std::string>& suite_names();

}  // namespace umbral
