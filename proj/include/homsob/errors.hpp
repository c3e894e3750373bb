#pragma once

#include <stdexcept>
#include <string>

namespace homsob {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Mismatched grids, lengths or dimensions.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// A parameter lies outside the domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// The input violates a numerical precondition (DC mass, spectral tail, support).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A sampling plan cannot be realized on the grid.
class PlanError : public Error {
public:
    using Error::Error;
};

/// Evaluation too close to a pole of a closed-form constant.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Malformed file or configuration.
class FormatError : public Error {
public:
    using Error::Error;
};

}  // namespace homsob
