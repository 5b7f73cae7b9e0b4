#pragma once

#include <stdexcept>
#include <string>

namespace upsc {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input text (parameter files, dataset CSVs, load specs).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Structurally valid input that violates a model constraint.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Failure inside a numerical routine (root solve, ODE step, fit).
class NumericalError : public Error {
public:
    using Error::Error;
};

} // namespace upsc
