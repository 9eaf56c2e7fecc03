#pragma once

#include <stdexcept>
#include <string>

namespace sunbranch {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed weights, labels, ranks or normalization.
class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

/// Coincident spectra or torus points where a formula degenerates.
class DegenerateArgumentError : public Error {
public:
    using Error::Error;
};

/// Tied sign arguments: the sign-determinant kernel is undefined there.
class NonGenericInputError : public Error {
public:
    using Error::Error;
};

/// Exact integer arithmetic exceeded the 128-bit range.
class ArithmeticOverflowError : public Error {
public:
    using Error::Error;
};

/// An iterative solver exhausted its budget.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// A value violated an internal contract (e.g. a kernel value that must be a
/// nonnegative integer missed its tolerance). Signals a bug, not bad input.
class InternalConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace sunbranch
