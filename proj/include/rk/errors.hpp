#pragma once

#include <stdexcept>
#include <string>

namespace rk {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Shape or length mismatch between operands, or an out-of-range index.
class DimensionError : public Error {
  public:
    using Error::Error;
};

/// A projection step touched a row with zero norm.
class ZeroRowError : public Error {
  public:
    using Error::Error;
};

/// The matrix is (numerically) rank deficient; R and A† are undefined.
class RankDeficientError : public Error {
  public:
    using Error::Error;
};

/// Invalid configuration: bad schedule/sampler pairing, degenerate weights,
/// malformed ensemble parameters.
class ConfigError : public Error {
  public:
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// An iterative routine exceeded its sweep budget.
class ConvergenceError : public Error {
  public:
    using Error::Error;
};

/// File could not be read, written, or parsed.
class IoError : public Error {
  public:
    using Error::Error;
};

} // namespace rk
