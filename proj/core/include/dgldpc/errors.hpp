#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dgldpc {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Matrix shapes that do not fit together or exceed the supported caps.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// Column index lists that are out of range, unsorted or repeated.
class InvalidSelection : public Error {
public:
    using Error::Error;
};

/// An enumeration would exceed its configured size bound.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Malformed text input. line/column are 1-based; 0 means unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : Error(line == 0 ? what
                          : "line " + std::to_string(line) + ", column " + std::to_string(column) +
                                ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// An ensemble violates one of the standing hypotheses (fractions, d_min, rank, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// The sampled CND EXIT function is not monotone, so it cannot be inverted.
class MonotonicityError : public Error {
public:
    using Error::Error;
};

/// Density evolution produced a trajectory that cannot happen in exact arithmetic.
class NumericalAnomaly : public Error {
public:
    using Error::Error;
};

/// The CND slope at p = 0 is zero, so the inverse slope is undefined.
class UndefinedSlope : public Error {
public:
    using Error::Error;
};

}  // namespace dgldpc
