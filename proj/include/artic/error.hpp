#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace artic {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Motion axis direction is not unit length.
struct InvalidAxisError : Error {
  using Error::Error;
};

/// Point geometry is too degenerate for the requested fit.
/// Carries the rank of the point covariance matrix.
struct DegenerateGeometryError : Error {
  DegenerateGeometryError(const std::string& msg, int rank_)
      : Error(msg), rank(rank_) {}
  int rank;
};

/// An operation that requires points received an empty cloud.
struct EmptyInputError : Error {
  using Error::Error;
};

/// Frame lists disagree in length.
struct FrameCountError : Error {
  using Error::Error;
};

/// Axis kinds do not match the operation.
struct KindMismatchError : Error {
  using Error::Error;
};

/// An optimizer produced a non-finite value. Carries the iteration index.
struct NumericalError : Error {
  NumericalError(const std::string& msg, int iteration_)
      : Error(msg), iteration(iteration_) {}
  int iteration;
};

/// Degradation removed too many points to keep estimating.
struct OverDegradedError : Error {
  using Error::Error;
};

/// Malformed file content. Carries the byte offset where parsing stopped.
struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t byte_offset_)
      : Error(msg), byte_offset(byte_offset_) {}
  std::size_t byte_offset;
};

/// Missing or unreadable path.
struct IoError : Error {
  using Error::Error;
};

}  // namespace artic
