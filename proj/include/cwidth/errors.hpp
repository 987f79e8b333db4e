#pragma once

#include <stdexcept>
#include <string>

namespace cwidth {

// Base class for all library errors.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A coordinate left the north stereographic chart (the south direction).
class ChartExitError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

// Input data violates a documented invariant.
class InvalidInputError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

// The support function is not of constant width within tolerance.
class WidthViolationError : public InvalidInputError {
 public:
  using InvalidInputError::InvalidInputError;
};

// A computation has no meaningful answer for this input (umbilic sphere,
// body shrinking to a point, ...).
class DegenerateError : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

}  // namespace cwidth
