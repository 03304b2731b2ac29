#pragma once

#include <stdexcept>
#include <string>

namespace ntnsim {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Geographic input where the math degenerates at the poles
/// (projection, local east/north frame).
class PoleSingularityError : public Error {
 public:
  using Error::Error;
};

/// Two points coincide where a direction or distance between
/// distinct points is required.
class CoincidentPointsError : public Error {
 public:
  using Error::Error;
};

/// Trajectory plan has no points of interest.
class EmptyPlanError : public Error {
 public:
  using Error::Error;
};

/// Trajectory collapses to a single location, so no motion or
/// timeline can be derived from it.
class DegenerateCurveError : public Error {
 public:
  using Error::Error;
};

/// Angle argument outside its documented range.
class AngleRangeError : public Error {
 public:
  using Error::Error;
};

/// Numeric argument that must be strictly positive was not.
class NonPositiveInputError : public Error {
 public:
  using Error::Error;
};

/// Generic argument outside its documented domain (non-finite input,
/// parameter outside [0, 1], and similar).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Loss-table lookup for an environment / visibility / bucket
/// combination the table does not carry.
class MissingTableEntryError : public Error {
 public:
  using Error::Error;
};

/// Frequency outside the grid of the zenith-attenuation table.
class FrequencyOutOfTableError : public Error {
 public:
  using Error::Error;
};

/// Empty collection where at least one element is required.
class EmptyInputError : public Error {
 public:
  using Error::Error;
};

/// Malformed input text (JSON or CSV that does not parse).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates a schema or value constraint.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Required field absent from a scenario document.
class MissingFieldError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// File could not be opened or read.
class FileError : public Error {
 public:
  using Error::Error;
};

}  // namespace ntnsim
