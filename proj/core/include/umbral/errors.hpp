#pragma once

#include <stdexcept>
#include <string>

namespace umbral {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation at a pole (Gamma at non-positive integers, zeta at s = 1).
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the mathematical domain of the function.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Integer argument outside the supported range (orders, dimensions).
class RangeError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

/// A series ran out of its term budget before its tail bound was met.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class CalibrationError : public Error {
 public:
  using Error::Error;
};

/// A sampling-based extraction whose error bound exceeds tolerance.
class ConditioningError : public Error {
 public:
  using Error::Error;
};

/// Truncated-basis operator whose protected block is no longer trustworthy.
class TruncationError : public Error {
 public:
  using Error::Error;
};

/// Integrand returned a non-finite value away from the endpoints.
class NonFiniteSample : public Error {
 public:
  using Error::Error;
};

}  // namespace umbral
