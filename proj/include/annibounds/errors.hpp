#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace annibounds {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands built over different rings, or free modules of different rank.
class RingMismatch : public Error {
public:
  using Error::Error;
};

/// Input is outside the class of modules an operation can decide exactly.
class Unsupported : public Error {
public:
  using Error::Error;
};

/// A documented precondition was violated by the caller.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// Two independent computations of the same quantity disagreed.
class CrossCheckFailure : public Error {
public:
  using Error::Error;
};

class SyntaxError : public Error {
public:
  SyntaxError(const std::string& message, std::size_t offset)
      : Error(message + " (at offset " + std::to_string(offset) + ")"),
        offset_(offset), bare_(message) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& bare_message() const noexcept { return bare_; }

private:
  std::size_t offset_;
  std::string bare_;
};

} // namespace annibounds
