// errors.hpp — exception types shared across the library
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonHermitianError : Error {
    using Error::Error;
};

struct NoConvergenceError : Error {
    using Error::Error;
};

struct ShapeMismatchError : Error {
    using Error::Error;
};

struct ZeroRowError : Error {
    explicit ZeroRowError(std::size_t row)
        : Error("zero row at index " + std::to_string(row)), index(row) {}
    std::size_t index;
};

struct IndexOutOfRangeError : Error {
    using Error::Error;
};

struct NotSpanningError : Error {
    using Error::Error;
};

struct NotFrameError : Error {
    using Error::Error;
};

struct InvalidShapeError : Error {
    using Error::Error;
};

struct UnitNormError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(std::size_t line_no, const std::string& what)
        : Error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
    std::size_t line;
};

struct UnsupportedFormatError : Error {
    using Error::Error;
};

}  // namespace kf
