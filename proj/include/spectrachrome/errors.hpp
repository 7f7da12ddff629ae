#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spectrachrome {

/// Malformed textual input (graph6, edge lists, family specs, projector JSON).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_ = 0;
};

/// Parameters outside the domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Iteration caps, numerical breakdown, failed post-condition checks.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_ = 0.0;
};

/// Enumeration or search budget exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inconsistent shapes or dimensions in matrix/projector inputs.
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A construction that should satisfy a proven identity does not, within tolerance.
class TheoremViolation : public std::runtime_error {
 public:
  TheoremViolation(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace spectrachrome
