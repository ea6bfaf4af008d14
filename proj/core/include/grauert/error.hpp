#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace grauert {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad label grammar, out-of-range parameter, wrong vector length.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A point outside the open domain where a function is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Requested computation exists mathematically but is outside what is implemented.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// Data files are missing, malformed, or carry the wrong schema version.
class DataError : public Error {
 public:
  using Error::Error;
};

/// Numerical reduction could not separate clusters at the working tolerance.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Evaluation of an adapted block at (or within 1e-12 of) a pole.
class SingularPointError : public Error {
 public:
  SingularPointError(double lambda, std::complex<double> z);

  double lambda() const { return lambda_; }
  std::complex<double> z() const { return z_; }

 private:
  double lambda_;
  std::complex<double> z_;
};

}  // namespace grauert
