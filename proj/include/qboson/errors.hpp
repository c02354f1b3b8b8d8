#pragma once

#include <stdexcept>
#include <string>

namespace qboson {

/// Base class of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    using Error::Error;
};

/// Binary polynomial operation over operands with different variable counts.
struct ArityMismatch : Error {
    using Error::Error;
};

/// Exact polynomial division requested but no exact quotient exists.
struct NonDivisible : Error {
    using Error::Error;
};

/// Polynomial evaluation at a point with a zero coordinate.
struct ZeroSubstitution : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

/// Operator order l outside 1..n.
struct InvalidOrder : Error {
    using Error::Error;
};

/// A printed denominator of the coefficient formulas vanishes at the
/// given parameter values.
struct ParameterDegeneracy : Error {
    using Error::Error;
};

/// Malformed configuration (CLI arguments, suite ranges, serialized input).
struct ConfigError : Error {
    using Error::Error;
};

} // namespace qboson
