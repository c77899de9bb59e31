#pragma once

#include <stdexcept>
#include <string>

namespace gnsscorr {

// Base type for all errors raised by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NearSingular : Error {
  using Error::Error;
};

struct DegenerateGeometry : Error {
  using Error::Error;
};

struct NoVisibleSatellites : Error {
  using Error::Error;
};

struct MissingGroundTruth : Error {
  using Error::Error;
};

struct ShapeMismatch : Error {
  using Error::Error;
};

struct LengthMismatch : Error {
  using Error::Error;
};

// Raised when a forward pass produces NaN/Inf; message names the layer.
struct NonFiniteActivation : Error {
  using Error::Error;
};

struct InsufficientMeasurements : Error {
  using Error::Error;
};

struct SingularGeometry : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

struct SchemaError : Error {
  using Error::Error;
};

struct UnitError : Error {
  using Error::Error;
};

struct TooFewTraces : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

struct EmptyInput : Error {
  using Error::Error;
};

}  // namespace gnsscorr
