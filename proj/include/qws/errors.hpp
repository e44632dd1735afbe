#pragma once

#include <stdexcept>
#include <string>

namespace qws {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotInvertible : Error {
    using Error::Error;
};
struct ShapeMismatch : Error {
    using Error::Error;
};
struct SizeLimitExceeded : Error {
    using Error::Error;
};
struct BadDimension : Error {
    using Error::Error;
};
struct BadTargets : Error {
    using Error::Error;
};
struct DegenerateB : Error {
    using Error::Error;
};
struct CayleySingular : Error {
    using Error::Error;
};
struct NonSymplecticResult : Error {
    using Error::Error;
};
struct LegendreSingular : Error {
    using Error::Error;
};
struct NotClifford : Error {
    using Error::Error;
};
struct InvariantViolated : Error {
    using Error::Error;
};
struct NoGaussianForm : Error {
    using Error::Error;
};
struct BackendRefused : Error {
    using Error::Error;
};

// Rejected circuit text, with 1-based location of the offending token.
struct ParseError : Error {
    int line;
    int column;
    ParseError(int line_, int column_, const std::string& what_)
        : Error("parse error at line " + std::to_string(line_) + ", column " +
                std::to_string(column_) + ": " + what_),
          line(line_),
          column(column_) {}
};

}  // namespace qws
