#pragma once

#include <map>
#include <string>

#include "umbral/specfun.hpp"

namespace umbral {

/// Asserted checks gate the build; measured checks record a discrepancy and
/// never fail.
enum class CheckKind { Asserted, Measured };

const char* to_string(CheckKind kind);

struct CheckResult {
  std::string name;
  std::map<std::string, std::string> inputs;
  cplx lhs;
  cplx rhs;
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  CheckKind kind = CheckKind::Asserted;
  std::string notes;

  CheckResult& input(const std::string& key, double value);
  CheckResult& input(const std::string& key, cplx value);
  CheckResult& input(const std::string& key, long long value);
  CheckResult& input(const std::string& key, int value) {
    return input(key, static_cast<long long>(value));
  }
  CheckResult& input(const std::string& key, const std::string& value);
  CheckResult& input(const std::string& key, const char* value) {
    return input(key, std::string(value));
  }
  CheckResult& note(const std::string& text);
};

/// pass <=> abs_err <= tol or rel_err <= tol.
CheckResult asserted(std::string name, cplx lhs, cplx rhs, double tolerance);
/// Always passes; tolerance is +inf. `notes` must be non-empty.
CheckResult measured(std::string name, cplx lhs, cplx rhs, std::string notes);
/// Asserted check whose evaluation threw; recorded as a failure.
CheckResult errored(std::string name, const std::string& what);

/// 17 significant digits, "%.16e".
std::string format_scalar(double v);

}  // namespace umbral
