#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

#include <gtest/gtest.h>

// |got - want| <= max(rel * |want|, abs)
inline ::testing::AssertionResult Close(std::complex<double> got, std::complex<double> want,
                                        double rel, double abs = 0.0) {
  const double err = std::abs(got - want);
  const double tol = std::max(rel * std::abs(want), abs);
  if (err <= tol) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << "got " << got << ", want " << want << ", |err| = " << err
                                       << " > " << tol;
}
