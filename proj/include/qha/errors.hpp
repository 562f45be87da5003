#pragma once

#include <stdexcept>
#include <string>

namespace qha {

/// Bad argument values (exponents, grid sizes, unknown enum strings, ...).
class InvalidParameterError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Two objects that must share a PhaseGrid do not.
class GridMismatchError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Snapped-mode shift with an off-grid translation component.
class GridAlignmentError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Geometry that does not fit inside the phase-space window.
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// A run whose mathematical premise fails (e.g. symbol not band-limited
/// in the requested region).
class HypothesisViolationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed or truncated data files.
class FileFormatError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace qha
