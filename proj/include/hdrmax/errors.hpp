#pragma once

#include <stdexcept>
#include <string>

namespace hdrmax {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed or unsupported input files: bad magic, unknown colorspace,
// truncated frames, byte sizes that do not tile into frames, out-of-range
// sample codes.
struct FormatError : Error {
  using Error::Error;
};

// Grids too small for an operator, or shape mismatch between operands.
struct DimensionError : Error {
  using Error::Error;
};

// Inputs without enough variation to fit or normalize: zero variance,
// one-signed product samples, constant reference frames.
struct DegenerateError : Error {
  using Error::Error;
};

// Invalid configuration values or flag combinations.
struct ConfigError : Error {
  using Error::Error;
};

// Missing or non-finite entries in feature/score tables.
struct DataError : Error {
  using Error::Error;
};

}  // namespace hdrmax
