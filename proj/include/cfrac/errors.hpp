#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace cfrac {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Argument sits on (or within tolerance of) a pole of the Gamma function.
class PoleError : public Error {
public:
  using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Two operands disagree on a structural property (e.g. lower limits).
class MismatchError : public Error {
public:
  using Error::Error;
};

/// The requested evaluation has no supported closed form.
class UnsupportedError : public Error {
public:
  using Error::Error;
};

/// Malformed function or operator text. `offset` is the byte offset of the
/// offending token.
class ParseError : public Error {
public:
  ParseError(std::size_t offset, const std::string& message)
      : Error("parse error at offset " + std::to_string(offset) + ": " + message),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

private:
  std::size_t offset_;
};

/// Quadrature did not reach the requested tolerance. Carries the last
/// estimate and the achieved (estimated) relative error.
class ConvergenceError : public Error {
public:
  ConvergenceError(const std::string& message, std::complex<double> best,
                   double achieved)
      : Error(message), best_(best), achieved_(achieved) {}

  std::complex<double> best_estimate() const noexcept { return best_; }
  double achieved_error() const noexcept { return achieved_; }

private:
  std::complex<double> best_;
  double achieved_;
};

}  // namespace cfrac
