#pragma once

#include <stdexcept>
#include <string>

namespace relmin {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Division by an exact zero.
struct DivisionByZeroError : Error {
    using Error::Error;
};

/// Operands have incompatible shapes (algebra level, vector length, matrix size).
struct ShapeError : Error {
    using Error::Error;
};

/// Input outside the mathematical domain of the operation (e.g. negative
/// radicand, composite modulus where a prime is required).
struct DomainError : Error {
    using Error::Error;
};

/// Element has no multiplicative inverse (zero norm form).
struct NotInvertibleError : Error {
    using Error::Error;
};

/// A stated precondition of the operation does not hold for the given input.
struct PreconditionError : Error {
    using Error::Error;
};

/// Malformed textual or JSON input.
struct FormatError : Error {
    using Error::Error;
};

/// An oracle broke its contract; `offending` is the textual form of the
/// value that violated it.
struct ContractError : Error {
    ContractError(const std::string& what, std::string offending_value)
        : Error(what), offending(std::move(offending_value)) {}
    std::string offending;
};

}  // namespace relmin
