#pragma once

#include <stdexcept>
#include <string>

namespace modp {

/// Base class for all library errors. Each error kind maps onto a process
/// exit code used by the command-line front end.
class Error : public std::runtime_error {
 public:
  Error(const std::string& what, int exit_code)
      : std::runtime_error(what), exit_code_(exit_code) {}
  int exit_code() const noexcept { return exit_code_; }

 private:
  int exit_code_;
};

/// Malformed input: datum strings, element strings, facet lists, JSON.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what, 2) {}
};

/// Invalid mathematical input that parsed fine (bad Dynkin type, lattice
/// not containing the coroots, mismatched facets or primes).
class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what) : Error(what, 2) {}
};

/// An enumeration exceeded its configured size or length cap.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& what) : Error(what, 3) {}
};

/// An operation was called outside its domain (non-special facet for the
/// special Satake path, component without a Levi point, ...).
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(what, 4) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what, 5) {}
};

}  // namespace modp
