#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "umbral/check_result.hpp"
#include "umbral/kernels.hpp"

namespace umbral {

struct ReportSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t measured = 0;
  /// Asserted checks that did not pass.
  std::size_t failed = 0;
};

struct VerificationReport {
  std::string suite;
  std::string fingerprint;
  std::vector<CheckResult> checks;
  std::optional<CalibrationRecord> calibration;

  [[nodiscard]] ReportSummary summary() const;
  [[nodiscard]] bool all_asserted_pass() const { return summary().failed == 0; }
  /// Sort checks by name; the serialized order is then independent of the
  /// order in which checks were produced.
  void canonicalize();
  void append(const VerificationReport& other);
  void add(CheckResult check) { checks.push_back(std::move(check)); }
};

/// Compiler id/version and build type.
std::string toolchain_fingerprint();

std::string to_json(const VerificationReport& report);
std::string to_csv(const VerificationReport& report);
/// Human-readable summary table.
std::string to_text(const VerificationReport& report);

}  // namespace umbral
