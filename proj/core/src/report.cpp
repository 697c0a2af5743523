#include "umbral/report.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#ifndef UMBRAL_COMPILER_ID
#define UMBRAL_COMPILER_ID "unknown"
#endif
#ifndef UMBRAL_BUILD_TYPE
#define UMBRAL_BUILD_TYPE "unknown"
#endif

namespace umbral {

namespace {

using nlohmann::json;

json complex_json(cplx z) { return json::array({format_scalar(z.real()), format_scalar(z.imag())}); }

json config_json(const MasterFunctionConfig& c) {
  return {{"alpha0", format_scalar(c.alpha0)},
          {"phase_sign", format_scalar(c.phase_sign)},
          {"a_prefactor", format_scalar(c.a_prefactor)},
          {"overall_sign", format_scalar(c.overall_sign)}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

ReportSummary VerificationReport::summary() const {
  ReportSummary s;
  s.total = checks.size();
  for (const auto& c : checks) {
    if (c.kind == CheckKind::Measured) ++s.measured;
    if (c.pass) {
      ++s.passed;
    } else if (c.kind == CheckKind::Asserted) {
      ++s.failed;
    }
  }
  return s;
}

void VerificationReport::canonicalize() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  if (!calibration && other.calibration) calibration = other.calibration;
}

std::string toolchain_fingerprint() {
  return std::string(UMBRAL_COMPILER_ID) + " " + UMBRAL_BUILD_TYPE;
}

std::string to_json(const VerificationReport& report) {
  json root;
  root["suite"] = report.suite;
  root["fingerprint"] = report.fingerprint;
  if (report.calibration) {
    const CalibrationRecord& cal = *report.calibration;
    json candidates = json::array();
    for (const auto& c : cal.candidates) {
      candidates.push_back({{"config", config_json(c.config)},
                            {"residual", format_scalar(c.residual)},
                            {"ladder_residual", format_scalar(c.ladder_residual)}});
    }
    root["calibration"] = {{"config", config_json(cal.config)},
                           {"residual", format_scalar(cal.residual)},
                           {"ladder_residual", format_scalar(cal.ladder_residual)},
                           {"candidates", candidates}};
  } else {
    root["calibration"] = nullptr;
  }
  json checks = json::array();
  for (const auto& c : report.checks) {
    json inputs = json::object();
    for (const auto& [k, v] : c.inputs) inputs[k] = v;
    checks.push_back({{"name", c.name},
                      {"inputs", inputs},
                      {"lhs", complex_json(c.lhs)},
                      {"rhs", complex_json(c.rhs)},
                      {"abs_err", format_scalar(c.abs_err)},
                      {"rel_err", format_scalar(c.rel_err)},
                      {"tolerance", format_scalar(c.tolerance)},
                      {"pass", c.pass},
                      {"kind", to_string(c.kind)},
                      {"notes", c.notes}});
  }
  root["checks"] = checks;
  const ReportSummary s = report.summary();
  root["summary"] = {{"total", s.total}, {"passed", s.passed}, {"measured", s.measured},
                     {"failed", s.failed}};
  return root.dump(2) + "\n";
}

std::string to_csv(const VerificationReport& report) {
  std::ostringstream os;
  os << "name,kind,pass,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,tolerance,notes\n";
  for (const auto& c : report.checks) {
    os << csv_field(c.name) << ',' << to_string(c.kind) << ',' << (c.pass ? "true" : "false")
       << ',' << format_scalar(c.lhs.real()) << ',' << format_scalar(c.lhs.imag()) << ','
       << format_scalar(c.rhs.real()) << ',' << format_scalar(c.rhs.imag()) << ','
       << format_scalar(c.abs_err) << ',' << format_scalar(c.rel_err) << ','
       << format_scalar(c.tolerance) << ',' << csv_field(c.notes) << '\n';
  }
  return os.str();
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream os;
  std::size_t width = 4;
  for (const auto& c : report.checks) width = std::max(width, c.name.size());
  os << "suite: " << report.suite << "\n";
  os << "fingerprint: " << report.fingerprint << "\n";
  if (report.calibration) {
    os << "calibration: " << report.calibration->config.describe()
       << " residual=" << format_scalar(report.calibration->residual) << "\n";
  }
  for (const auto& c : report.checks) {
    const char* status = c.kind == CheckKind::Measured ? "MEASURED" : (c.pass ? "PASS" : "FAIL");
    os << c.name << std::string(width + 2 - c.name.size(), ' ') << status
       << "  abs_err=" << format_scalar(c.abs_err) << "  tol=" << format_scalar(c.tolerance)
       << "\n";
  }
  const ReportSummary s = report.summary();
  os << "total=" << s.total << " passed=" << s.passed << " measured=" << s.measured
     << " failed=" << s.failed << "\n";
  return os.str();
}

}  // namespace umbral
