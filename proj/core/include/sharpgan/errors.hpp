#pragma once

#include <stdexcept>
#include <string>

namespace sharpgan {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct ModeError : Error {
    using Error::Error;
};

struct ThresholdError : Error {
    using Error::Error;
};

struct TooSmall : Error {
    using Error::Error;
};

struct DegenerateReference : Error {
    using Error::Error;
};

struct EmptyBatch : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct FormatError : Error {
    using Error::Error;
};

}  // namespace sharpgan
