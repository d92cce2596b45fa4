#pragma once

#include <stdexcept>
#include <string>

namespace opsplit {

// Base class for every error raised by the library. The CLI maps the
// categories below onto its exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical failures (exit code 3).
class NumericalError : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class SingularResolvent : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class RankDeficient : public NumericalError {
 public:
  RankDeficient(std::size_t index, double residual);

  // Position of the vector that was (numerically) dependent on its predecessors.
  std::size_t index() const { return index_; }
  double residual() const { return residual_; }

 private:
  std::size_t index_;
  double residual_;
};

// Misuse of the operator calculus (exit code 2 when surfaced by the CLI).
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NonComputableResolvent : public Error {
 public:
  using Error::Error;
};

class MonotonicityViolation : public Error {
 public:
  using Error::Error;
};

class NotAffine : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class UnknownForm : public Error {
 public:
  using Error::Error;
};

class UnknownSuite : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace opsplit
