#pragma once

#include <stdexcept>
#include <string>

namespace cybe {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requested data lies outside the exponent window a value is certified on.
// carries a human-readable description of the deficit.
struct WindowTooNarrow : Error {
    using Error::Error;
};

struct DivisionByZeroSeries : Error {
    using Error::Error;
};

// w does not satisfy w(0) = 0, w'(0) != 0.
struct InvalidCoordinate : Error {
    using Error::Error;
};

// leading coefficient of a power series is 0 where a unit is required.
struct NotAUnit : Error {
    using Error::Error;
};

struct NotSimple : Error {
    using Error::Error;
};

struct InvalidEquivalence : Error {
    using Error::Error;
};

struct NotSkew : Error {
    using Error::Error;
};

struct NotGenusOne : Error {
    using Error::Error;
};

struct InvalidGenerator : Error {
    using Error::Error;
};

struct ParseError : Error {
    int line = 0, column = 0;
    ParseError(const std::string& msg, int l, int c)
        : Error(msg + " (line " + std::to_string(l) + ", column " + std::to_string(c) + ")"),
          line(l), column(c) {}
};

struct SchemaVersionMismatch : Error {
    using Error::Error;
};

}  // namespace cybe
