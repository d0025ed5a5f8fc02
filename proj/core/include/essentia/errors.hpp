#pragma once

#include <stdexcept>
#include <string>

namespace essentia {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range user input.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// An operation was invoked outside its documented preconditions.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// A search or iteration cap was hit. The result is unknown, never wrong.
class ResourceExceeded : public Error {
 public:
  using Error::Error;
};

/// No separator avoiding the forbidden vertices exists.
class SeparatorInfeasible : public Error {
 public:
  using Error::Error;
};

/// The pinned vertex alone forms an obstacle, so x_v = 0 is infeasible.
class PinInfeasible : public Error {
 public:
  using Error::Error;
};

}  // namespace essentia
