#pragma once

#include <stdexcept>
#include <string>

namespace hstar {

/** Base class for all errors raised by this library. */
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/** Malformed arguments: dimension mismatches, bad ranges, unparsable data. */
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(what) {}
};

/** The request is valid but outside what this toolkit supports. */
class CapabilityError : public Error {
 public:
  explicit CapabilityError(const std::string& what) : Error(what) {}
};

/** Degenerate geometry: zero vectors, flat point sets, degenerate height lifts. */
class DegeneracyError : public Error {
 public:
  explicit DegeneracyError(const std::string& what) : Error(what) {}
};

/** A linear solve hit a singular matrix. */
class SingularMatrixError : public Error {
 public:
  explicit SingularMatrixError(const std::string& what) : Error(what) {}
};

/** An internal consistency check failed; indicates a bug, never user error. */
class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(const std::string& what) : Error(what) {}
};

}  // namespace hstar
