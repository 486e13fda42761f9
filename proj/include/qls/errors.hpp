#pragma once

#include <stdexcept>
#include <string>

namespace qls {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A non-finite value (NaN/Inf) was found where finite input is required.
class NumericError : public Error {
public:
  using Error::Error;
};

/// Two objects that must live on the same grid do not.
class GridMismatchError : public Error {
public:
  using Error::Error;
};

/// A coordinate or shift vector has the wrong number of components.
class DimensionMismatchError : public Error {
public:
  using Error::Error;
};

/// The fiber map has no finite maximizer (coupling integral is zero).
class NoMaximizerError : public Error {
public:
  using Error::Error;
};

/// Bracketing the fiber-derivative sign change failed; the moments or the
/// potential violate the structure the search relies on.
class BracketFailureError : public Error {
public:
  using Error::Error;
};

/// An operation was called in a boundary mode it does not support.
class UnsupportedModeError : public Error {
public:
  using Error::Error;
};

/// A scan window is smaller than one grid cell.
class DegenerateWindowError : public Error {
public:
  using Error::Error;
};

/// Invalid run configuration (bad syntax, unknown key, violated constraint).
class ConfigError : public Error {
public:
  using Error::Error;
};

}  // namespace qls
