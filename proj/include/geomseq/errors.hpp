#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace geomseq {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A result left the representable range (non-finite log).
class RangeError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside the operation's domain (e.g. division by 0_G).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed parameters: unknown family, invalid λ sequence, bad flags.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// An analysis was asked to run on input that does not meet its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Text input could not be read. Carries the 1-based offending line (0 if none).
class InputError : public Error {
 public:
  InputError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace geomseq
