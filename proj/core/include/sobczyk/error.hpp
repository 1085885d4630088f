#pragma once

#include <stdexcept>
#include <string>

namespace sobczyk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A point was used with a line that did not produce it.
class InvalidPoint : public Error {
 public:
  using Error::Error;
};

/// Two objects that must live on the same line do not.
class LineMismatch : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation was violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A postcondition asserted at runtime failed. Indicates a library bug or a
/// malformed instance that slipped past validation.
class PostconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class NotStabilized : public Error {
 public:
  explicit NotStabilized(std::size_t stage)
      : Error("hierarchy did not empty within " + std::to_string(stage) + " stages"), max_stage(stage) {}
  std::size_t max_stage;
};

class ScheduleNotFound : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace sobczyk
