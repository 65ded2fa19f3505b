#pragma once

#include <stdexcept>
#include <string>

namespace dpjet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different ambient rings or truncation windows.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// An argument violates an operation's precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed a configured size guard.
class ResourceCapExceeded : public Error {
 public:
  ResourceCapExceeded(std::string cap, const std::string& detail)
      : Error(cap + " exceeded: " + detail), cap_(std::move(cap)) {}

  const std::string& cap() const noexcept { return cap_; }

 private:
  std::string cap_;
};

}  // namespace dpjet
