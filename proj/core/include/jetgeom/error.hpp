#pragma once
#include <stdexcept>
#include <string>

namespace jetgeom {

// Base class for every error the library throws deliberately.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text; `offset` is a 0-based byte position into the source.
struct ParseError : Error {
    std::size_t offset;
    ParseError(std::string msg, std::size_t off)
        : Error(std::move(msg)), offset(off) {}
};

// Two values living on different charts were combined.
struct ChartMismatch : Error {
    using Error::Error;
};

// Division by an identically zero expression.
struct DivisionByZero : Error {
    using Error::Error;
};

// A structural precondition failed (degeneracy, wrong degree, bad dimensions...).
struct StructureError : Error {
    using Error::Error;
};

} // namespace jetgeom
