#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace netdyn {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid graph construction, unknown node label, or violated graph invariant.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// An analysis precondition does not hold for the given input
/// (wrong directedness, too few nodes, disconnected input, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Power iteration did not reach the requested tolerance.
class ConvergenceError : public DomainError {
 public:
  ConvergenceError(const std::string& what, double residual)
      : DomainError(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// A strict-mode mutation event whose precondition does not hold.
class MutationError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace netdyn
