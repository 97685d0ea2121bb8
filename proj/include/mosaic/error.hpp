#ifndef MOSAIC_ERROR_HPP
#define MOSAIC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace mosaic {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad parameter or config value (out-of-range tau, empty list, ...).
struct InvalidArgumentError : Error {
    using Error::Error;
};

/// Grid dimensions do not match.
struct ShapeError : Error {
    using Error::Error;
};

/// Unknown label or missing entry.
struct NotFoundError : Error {
    using Error::Error;
};

/// File could not be read, written or parsed.
struct IoError : Error {
    using Error::Error;
};

}  // namespace mosaic

#endif
