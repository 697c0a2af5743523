#include "umbral/check_result.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <utility>

#include "umbral/errors.hpp"

namespace umbral {

const char* to_string(CheckKind kind) {
  return kind == CheckKind::Asserted ? "asserted" : "measured";
}

std::string format_scalar(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) v = 0.0;  // drop the sign of negative zero
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

CheckResult& CheckResult::input(const std::string& key, double value) {
  inputs[key] = format_scalar(value);
  return *this;
}

CheckResult& CheckResult::input(const std::string& key, cplx value) {
  inputs[key] = format_scalar(value.real()) + (value.imag() < 0 ? "-" : "+") +
                format_scalar(std::abs(value.imag())) + "i";
  return *this;
}

CheckResult& CheckResult::input(const std::string& key, long long value) {
  inputs[key] = std::to_string(value);
  return *this;
}

CheckResult& CheckResult::input(const std::string& key, const std::string& value) {
  inputs[key] = value;
  return *this;
}

CheckResult& CheckResult::note(const std::string& text) {
  if (!notes.empty()) notes += "; ";
  notes += text;
  return *this;
}

namespace {

CheckResult compare(std::string name, cplx lhs, cplx rhs) {
  CheckResult r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_err = std::abs(lhs - rhs);
  const double scale = std::abs(rhs);
  if (r.abs_err == 0.0) {
    r.rel_err = 0.0;
  } else if (scale == 0.0) {
    r.rel_err = std::numeric_limits<double>::infinity();
  } else {
    r.rel_err = r.abs_err / scale;
  }
  if (std::isnan(r.abs_err)) r.rel_err = r.abs_err;
  return r;
}

}  // namespace

CheckResult asserted(std::string name, cplx lhs, cplx rhs, double tolerance) {
  CheckResult r = compare(std::move(name), lhs, rhs);
  r.kind = CheckKind::Asserted;
  r.tolerance = tolerance;
  r.pass = r.abs_err <= tolerance || r.rel_err <= tolerance;
  return r;
}

CheckResult measured(std::string name, cplx lhs, cplx rhs, std::string notes) {
  if (notes.empty()) throw DomainError("measured check " + name + " needs notes");
  CheckResult r = compare(std::move(name), lhs, rhs);
  r.kind = CheckKind::Measured;
  r.tolerance = std::numeric_limits<double>::infinity();
  r.pass = true;
  r.notes = std::move(notes);
  return r;
}

CheckResult errored(std::string name, const std::string& what) {
  CheckResult r;
  r.name = std::move(name);
  r.lhs = r.rhs = std::numeric_limits<double>::quiet_NaN();
  r.abs_err = r.rel_err = std::numeric_limits<double>::quiet_NaN();
  r.kind = CheckKind::Asserted;
  r.pass = false;
  r.notes = "evaluation failed: " + what;
  return r;
}

}  // namespace umbral
